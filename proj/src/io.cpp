#include "lctjt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lctjt {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw ParseError("trailing junk in " + what + ": '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number in " + what + ": '" + s + "'");
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open for writing: " + tmp);
        os << content;
        if (!os) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for: " + path);
}

SampledSignal read_signal_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open signal file: " + path);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty signal file: " + path);
    auto header = split_csv(line);
    for (auto& h : header) h = trim(h);
    bool has_im;
    if (header.size() == 3 && header[0] == "t" && header[1] == "re" && header[2] == "im")
        has_im = true;
    else if (header.size() == 2 && header[0] == "t" && header[1] == "re")
        has_im = false;
    else
        throw ParseError("signal file header must be 't,re,im' or 't,re': " + path);
    std::vector<double> t;
    std::vector<cplx> v;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw ParseError(path + ":" + std::to_string(lineno) + ": wrong column count");
        double tv = parse_double(trim(cells[0]), "t");
        double re = parse_double(trim(cells[1]), "re");
        double im = has_im ? parse_double(trim(cells[2]), "im") : 0.0;
        t.push_back(tv);
        v.push_back(cplx(re, im));
    }
    if (t.size() < 2) throw ParseError("signal file needs at least 2 samples: " + path);
    double dt = t[1] - t[0];
    if (!(dt > 0.0)) throw ParseError("non-increasing time column: " + path);
    for (std::size_t k = 1; k < t.size(); ++k) {
        double step = t[k] - t[k - 1];
        if (step == 0.0) throw ParseError("duplicate time point in: " + path);
        if (std::abs(step - dt) > 1e-9 * std::max(std::abs(dt), 1.0))
            throw ParseError("non-uniform sampling step in: " + path);
    }
    return SampledSignal(std::move(v), t[0], dt);
}

void write_signal_csv(const std::string& path, const SampledSignal& x) {
    std::ostringstream os;
    os << "t,re,im\n";
    for (std::size_t k = 0; k < x.size(); ++k) {
        double t = x.t0() + static_cast<double>(k) * x.dt();
        os << fmt17(t) << ',' << fmt17(x[k].real()) << ',' << fmt17(x[k].imag()) << '\n';
    }
    write_text_atomic(path, os.str());
}

void write_signal_csv(const std::string& path, const RealSignal& x) {
    std::ostringstream os;
    os << "t,re\n";
    for (std::size_t k = 0; k < x.size(); ++k) {
        double t = x.t0() + static_cast<double>(k) * x.dt();
        os << fmt17(t) << ',' << fmt17(x[k]) << '\n';
    }
    write_text_atomic(path, os.str());
}

LctParams read_matrix_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    for (const char* key : {"a", "b", "c", "d"})
        if (!j.contains(key) || !j[key].is_number())
            throw ParseError("matrix file must have numeric a,b,c,d: " + path);
    return LctParams(j["a"].get<double>(), j["b"].get<double>(), j["c"].get<double>(),
                     j["d"].get<double>());
}

void write_matrix_json(const std::string& path, const LctParams& m) {
    nlohmann::json j = {{"a", m.a()}, {"b", m.b()}, {"c", m.c()}, {"d", m.d()}};
    write_text_atomic(path, j.dump(2) + "\n");
}

void write_tfd_csv(const std::string& path, const TfdMatrix& tfd) {
    std::ostringstream os;
    os << "time";
    for (double f : tfd.bin_freqs) os << ',' << fmt17(f);
    os << '\n';
    for (std::size_t r = 0; r < tfd.magnitudes.size(); ++r) {
        os << fmt17(tfd.frame_times[r]);
        for (double v : tfd.magnitudes[r]) os << ',' << fmt17(v);
        os << '\n';
    }
    write_text_atomic(path, os.str());
}

}  // namespace lctjt
