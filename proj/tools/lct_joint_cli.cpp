#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "lctjt/apps.hpp"
#include "lctjt/io.hpp"
#include "lctjt/joint.hpp"
#include "lctjt/transforms.hpp"
#include "lctjt/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitParse = 3;
constexpr int kExitNumeric = 4;

using namespace lctjt;

RealSignal require_real(const SampledSignal& x) {
    std::vector<double> v(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].imag() != 0.0)
            throw std::domain_error("operation requires a real input signal (im column nonzero)");
        v[k] = x[k].real();
    }
    return RealSignal(std::move(v), x.t0(), x.dt());
}

LctParams parse_matrix_arg(const std::string& spec) {
    if (spec.rfind("rot:", 0) == 0) {
        double th = std::stod(spec.substr(4));
        return LctParams(std::cos(th), std::sin(th), -std::sin(th), std::cos(th));
    }
    return read_matrix_json(spec);
}

LctForm form_from_string(const std::string& s) {
    if (s == "1") return LctForm::FormI;
    if (s == "2") return LctForm::FormII;
    if (s == "3") return LctForm::FormIII;
    if (s == "4") return LctForm::FormIV;
    if (s == "auto") return LctForm::Auto;
    throw CLI::ValidationError("--form must be one of 1,2,3,4,auto");
}

int run_transform(const std::string& op, const std::string& in_file,
                  const std::string& matrix_file, const std::string& out_file,
                  const std::string& form_str) {
    SampledSignal x = read_signal_csv(in_file);
    LctForm form = form_from_string(form_str);
    const bool needs_matrix = (op != "fourier" && op != "hilbert" && op != "analytic");
    if (needs_matrix && matrix_file.empty())
        throw CLI::RequiredError("--matrix is required for op '" + op + "'");
    SampledSignal out = x;
    if (op == "fourier")
        out = fourier(x);
    else if (op == "hilbert")
        out = hilbert(x);
    else if (op == "analytic")
        out = analytic(require_real(x));
    else {
        LctParams m = parse_matrix_arg(matrix_file);
        if (op == "lct")
            out = lct(x, m, form);
        else if (op == "ilct")
            out = ilct(x, m, form);
        else if (op == "la")
            out = la(require_real(x), m);
        else if (op == "lh")
            out = lh(require_real(x), m);
        else if (op == "lca")
            out = lca(require_real(x), m);
        else if (op == "al-inv")
            out = al_inv(x, m);
        else if (op == "hl-inv")
            out = hl_inv(x, m);
        else if (op == "lhl-inv")
            out = lhl_inv(x, m);
        else if (op == "lcl-inv")
            out = lcl_inv(x, m);
        else
            throw CLI::ValidationError("unknown op: " + op);
    }
    write_signal_csv(out_file, out);
    return kExitOk;
}

int run_verify(const std::string& builtin, const std::string& matrix_file,
               const std::string& signal, std::size_t n, double tol, double tol_lhl,
               double tol_pointwise, const std::string& json_out) {
    LctParams m = builtin_matrix_aneq0();
    if (!matrix_file.empty())
        m = parse_matrix_arg(matrix_file);
    else if (builtin == "a0")
        m = builtin_matrix_a0();
    else if (builtin != "aneq0")
        throw CLI::ValidationError("--builtin must be aneq0 or a0");
    Grid grid = default_grid(n);
    auto cases = default_cases(m, signal, tol, tol_lhl, tol_pointwise);
    VerificationReport rep = run_suite(cases, grid);
    std::cout << rep.to_text();
    if (!json_out.empty()) write_text_atomic(json_out, rep.to_json() + "\n");
    return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

std::string joinpath(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir == ".") return name;
    return dir + "/" + name;
}

int demo_separate(const std::string& matrix_file, double cutoff, const std::string& outdir) {
    LctParams m = matrix_file.empty() ? builtin_matrix_aneq0() : parse_matrix_arg(matrix_file);
    Grid grid = default_grid();
    RealSignal x = test_signal_two_gauss(grid);
    auto [hi, lo] = separate(x, m, LctCutoff{cutoff});
    write_signal_csv(joinpath(outdir, "part1.csv"), hi);
    write_signal_csv(joinpath(outdir, "part2.csv"), lo);
    SampledSignal r1 = ilct(hi, m), r2 = ilct(lo, m);
    write_signal_csv(joinpath(outdir, "recovered1.csv"), r1);
    write_signal_csv(joinpath(outdir, "recovered2.csv"), r2);
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        worst = std::max(worst, std::abs(r1[k].real() + r2[k].real() - x[k]));
    std::cout << "sum-reconstruction max error: " << worst << "\n";
    return kExitOk;
}

int demo_filter(bool with_noise, unsigned seed, const std::string& outdir) {
    LctParams m = builtin_matrix_aneq0();
    Grid grid = default_grid();
    RealSignal x = test_signal_two_gauss(grid);
    // interference chirp matched to the LCT so it lands in a narrow omega band
    std::vector<double> yv(grid.n);
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.02);
    for (std::size_t k = 0; k < grid.n; ++k) {
        double t = grid.point(k);
        double chirp = 0.8 * std::cos(-kPi * (m.a() / m.b()) * t * t + 2.0 * kPi * 4.5 * t);
        yv[k] = x[k] + chirp + (with_noise ? gauss(rng) : 0.0);
    }
    RealSignal y(std::move(yv), grid.t0, grid.dt);
    SampledSignal Lclean = la(x, m);
    double peak = 0.0;
    for (std::size_t k = 0; k < Lclean.size(); ++k) peak = std::max(peak, std::abs(Lclean[k]));
    FilterSpec h;
    h.gain.resize(Lclean.size());
    for (std::size_t k = 0; k < Lclean.size(); ++k)
        h.gain[k] = (std::abs(Lclean[k]) > 1e-3 * peak) ? 1.0 : 0.0;
    RealSignal rec = lct_filter(y, m, h);
    double e_before = 0.0, e_after = 0.0, e_sig = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        e_before += (y[k] - x[k]) * (y[k] - x[k]);
        e_after += (rec[k] - x[k]) * (rec[k] - x[k]);
        e_sig += x[k] * x[k];
    }
    write_signal_csv(joinpath(outdir, "noisy.csv"), y);
    write_signal_csv(joinpath(outdir, "filtered.csv"), rec);
    std::cout << "SNR before: " << 10.0 * std::log10(e_sig / e_before)
              << " dB, after: " << 10.0 * std::log10(e_sig / e_after)
              << " dB, improvement: " << 10.0 * std::log10(e_before / e_after) << " dB\n";
    return kExitOk;
}

int demo_sample(const std::string& outdir) {
    Grid grid = default_grid();
    std::vector<double> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        double t = grid.point(k);
        v[k] = std::exp(-0.08 * t * t) * std::cos(2.0 * kPi * (1.5 * t + 0.35 * t * t));
    }
    RealSignal x(std::move(v), grid.t0, grid.dt);
    ShearResult res = shear_reduce(x);
    write_signal_csv(joinpath(outdir, "compacted.csv"), res.compacted);
    std::cout << "alpha=" << res.shear.alpha << " beta=" << res.shear.beta
              << "\nBT products: BaTa=" << res.bt_a << " 2BbTb=" << res.bt_b
              << " 2BcTc=" << res.bt_c << "\n";
    return kExitOk;
}

int demo_if(const std::string& matrix_spec, const std::string& outdir) {
    Grid grid = default_grid();
    LctParams m = matrix_spec.empty() ? parse_matrix_arg("rot:0.6") : parse_matrix_arg(matrix_spec);
    std::vector<double> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        double t = grid.point(k);
        v[k] = std::exp(-0.05 * t * t) * std::cos(2.0 * kPi * (2.0 * t + 0.25 * t * t));
    }
    RealSignal x(std::move(v), grid.t0, grid.dt);
    SampledSignal LXA = la(x, m);
    auto pts = if_estimate(LXA, m);
    std::ostringstream os;
    os << "t,f\n";
    for (auto& [t, f] : pts) os << t << ',' << f << '\n';
    write_text_atomic(joinpath(outdir, "if_points.csv"), os.str());
    std::cout << "wrote " << pts.size() << " IF samples\n";
    return kExitOk;
}

int demo_ssb(const std::string& key_file, double fc, const std::string& message,
             const std::string& outdir) {
    LctParams m = key_file.empty() ? builtin_matrix_aneq0() : parse_matrix_arg(key_file);
    // wide grid so the carrier stays below the LCT-domain Nyquist rate
    Grid grid{-16.0, 1.0 / 64.0, 2048};
    RealSignal x = test_signal_by_id(message, grid);
    SsbKey key{m, fc};
    RealSignal s = ssb_modulate(x, key);
    RealSignal rec = ssb_demodulate(s, key);
    write_signal_csv(joinpath(outdir, "modulated.csv"), s);
    write_signal_csv(joinpath(outdir, "recovered.csv"), rec);
    double err = 0.0, ref = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        err += (rec[k] - x[k]) * (rec[k] - x[k]);
        ref += x[k] * x[k];
    }
    std::cout << "round-trip relative L2 error: " << std::sqrt(err / ref) << "\n";
    return kExitOk;
}

int run_tfd(const std::string& in_file, std::size_t window, std::size_t hop,
            const std::string& out_file) {
    SampledSignal x = read_signal_csv(in_file);
    write_tfd_csv(out_file, stft_tfd(x, window, hop));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear canonical transform / Hilbert joint-transform toolkit"};
    app.require_subcommand(1);

    // transform
    auto* t = app.add_subcommand("transform", "apply a transform to a signal file");
    std::string t_op, t_in, t_matrix, t_out = "out.csv", t_form = "auto";
    t->add_option("op", t_op, "one of: fourier hilbert analytic lct ilct la lh al-inv hl-inv lhl-inv lcl-inv lca")
        ->required();
    t->add_option("-i,--input", t_in, "input signal CSV")->required();
    t->add_option("-m,--matrix", t_matrix, "matrix JSON file or rot:<angle>");
    t->add_option("-o,--output", t_out, "output signal CSV");
    t->add_option("--form", t_form, "LCT form: 1,2,3,4,auto");

    // verify
    auto* vf = app.add_subcommand("verify", "run the joint-vs-cascade verification suite");
    std::string v_builtin = "aneq0", v_matrix, v_signal = "twogauss", v_json;
    std::size_t v_n = 1024;
    double v_tol = 1e-6, v_tol_lhl = 1e-5, v_tol_pw = 1e-8;
    vf->add_option("--builtin", v_builtin, "builtin matrix: aneq0 or a0");
    vf->add_option("--matrix", v_matrix, "matrix JSON file (overrides --builtin)");
    vf->add_option("--signal", v_signal, "test signal: twogauss or sincgauss");
    vf->add_option("--n", v_n, "grid size");
    vf->add_option("--tol", v_tol, "tolerance for integral-branch cases");
    vf->add_option("--tol-lhl", v_tol_lhl, "tolerance for the LCT-domain Hilbert case");
    vf->add_option("--tol-pointwise", v_tol_pw, "tolerance for closed-form branches");
    vf->add_option("--json", v_json, "write machine-readable report here");

    // demo
    auto* dm = app.add_subcommand("demo", "application demos");
    dm->require_subcommand(1);
    auto* d_sep = dm->add_subcommand("separate", "LCT-domain component separation");
    std::string sep_m, sep_out = ".";
    double sep_cut = 1.5;
    d_sep->add_option("-m,--matrix", sep_m, "matrix JSON");
    d_sep->add_option("--cutoff", sep_cut, "LCT-domain cutoff");
    d_sep->add_option("--outdir", sep_out, "output directory");
    auto* d_fil = dm->add_subcommand("filter", "LCT-domain filtering");
    bool fil_noise = false;
    unsigned fil_seed = 0;
    std::string fil_out = ".";
    d_fil->add_flag("--noise", fil_noise, "add white noise");
    d_fil->add_option("--seed", fil_seed, "noise seed");
    d_fil->add_option("--outdir", fil_out, "output directory");
    auto* d_smp = dm->add_subcommand("sample", "shear search / BT-product reduction");
    std::string smp_out = ".";
    d_smp->add_option("--outdir", smp_out, "output directory");
    auto* d_if = dm->add_subcommand("if", "instantaneous-frequency estimation");
    std::string if_m, if_out = ".";
    d_if->add_option("-m,--matrix", if_m, "matrix JSON or rot:<angle>");
    d_if->add_option("--outdir", if_out, "output directory");
    auto* d_ssb = dm->add_subcommand("ssb", "keyed single-sideband round trip");
    std::string ssb_key, ssb_msg = "twogauss", ssb_out = ".";
    double ssb_fc = 8.0;
    d_ssb->add_option("--key", ssb_key, "key matrix JSON");
    d_ssb->add_option("--fc", ssb_fc, "carrier frequency");
    d_ssb->add_option("--message", ssb_msg, "message signal id");
    d_ssb->add_option("--outdir", ssb_out, "output directory");

    // tfd
    auto* tf = app.add_subcommand("tfd", "write a spectrogram CSV");
    std::string tf_in, tf_out = "tfd.csv";
    std::size_t tf_win = 128, tf_hop = 16;
    tf->add_option("-i,--input", tf_in, "input signal CSV")->required();
    tf->add_option("--window", tf_win, "window length");
    tf->add_option("--hop", tf_hop, "hop size");
    tf->add_option("-o,--output", tf_out, "output CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (t->parsed()) return run_transform(t_op, t_in, t_matrix, t_out, t_form);
        if (vf->parsed())
            return run_verify(v_builtin, v_matrix, v_signal, v_n, v_tol, v_tol_lhl, v_tol_pw,
                              v_json);
        if (dm->parsed()) {
            if (d_sep->parsed()) return demo_separate(sep_m, sep_cut, sep_out);
            if (d_fil->parsed()) return demo_filter(fil_noise, fil_seed, fil_out);
            if (d_smp->parsed()) return demo_sample(smp_out);
            if (d_if->parsed()) return demo_if(if_m, if_out);
            if (d_ssb->parsed()) return demo_ssb(ssb_key, ssb_fc, ssb_msg, ssb_out);
        }
        if (tf->parsed()) return run_tfd(tf_in, tf_win, tf_hop, tf_out);
        return kExitBadArgs;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArgs;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
