#pragma once

#include <string>

#include "lctjt/types.hpp"

namespace lctjt {

enum class JointKind { LA, LH, ALinv, HLinv, LHLinv, LcLinv, LcA };

std::string joint_kind_name(JointKind k);

// Single-pass joint transforms. Each is numerically equivalent to its cascade
// but never materializes the intermediate signal. All require b != 0; the
// a = 0 and a != 0 branches are selected internally.

// LCT of the analytic signal of x.
SampledSignal la(const RealSignal& x, const LctParams& m);

// LCT of the Hilbert transform of x.
SampledSignal lh(const RealSignal& x, const LctParams& m);

// Analytic signal of the inverse LCT of LX.
SampledSignal al_inv(const SampledSignal& LX, const LctParams& m);

// Hilbert transform of the inverse LCT of LX.
SampledSignal hl_inv(const SampledSignal& LX, const LctParams& m);

// LCT-domain Hilbert transform: LCT o H o ILCT.
SampledSignal lhl_inv(const SampledSignal& LX, const LctParams& m);

// LCT-domain conjugation: maps the LCT of z to the LCT of conj(z).
SampledSignal lcl_inv(const SampledSignal& LXA, const LctParams& m);

// LCT of the conjugated analytic signal of x.
SampledSignal lca(const RealSignal& x, const LctParams& m);

// Cascade references. Each joint transform is defined by such a chain; these
// are first-class so callers can cross-check the single-pass routes.
SampledSignal cascade_la(const RealSignal& x, const LctParams& m);
SampledSignal cascade_lh(const RealSignal& x, const LctParams& m);
SampledSignal cascade_al_inv(const SampledSignal& LX, const LctParams& m);
SampledSignal cascade_hl_inv(const SampledSignal& LX, const LctParams& m);
SampledSignal cascade_lhl_inv(const SampledSignal& LX, const LctParams& m);
SampledSignal cascade_lcl_inv(const SampledSignal& LXA, const LctParams& m);
SampledSignal cascade_lca(const RealSignal& x, const LctParams& m);

}  // namespace lctjt
