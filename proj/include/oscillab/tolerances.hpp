#pragma once

namespace oscillab {

// Central tolerance configuration. All inequality harnesses and fast-path
// agreement checks read from one instance of this record so that a test or
// experiment can tighten/loosen everything in one place.
struct Tolerances {
    double rel = 1e-12;           // default relative tolerance
    double fast_p2 = 1e-10;       // fast p=2 path vs naive (squaring loses digits)
    double search = 1e-12;        // golden-section argument tolerance
    double norm_slack = 1e-9;     // slack for norm-level inequality checks
    double zero_osc = 1e-14;      // oscillations below this count as zero
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace oscillab
