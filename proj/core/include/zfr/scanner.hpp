#pragma once

// Argument-principle zero counting on rectangles, Newton refinement,
// real-segment scanning, and end-to-end zero-free-region certification.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zfr/dlvp.hpp"
#include "zfr/eval.hpp"
#include "zfr/lfunction.hpp"

namespace zfr {

struct ComplexRectangle {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    bool contains(std::complex<double> s) const {
        return s.real() > sigma_min && s.real() < sigma_max && s.imag() > t_min &&
               s.imag() < t_max;
    }
    void validate(int pole_order) const;  // shape + 1e-3 clearance of s=1 on the boundary
};

enum class ZeroMethod { ArgumentPrinciple, NewtonRefined };

struct ZeroRecord {
    std::complex<double> rho;  // beta + i gamma
    int multiplicity = 1;
    double refine_error = 0.0;
    ZeroMethod method = ZeroMethod::NewtonRefined;
};

enum class Verdict { Certified, ZeroFound, Inconclusive };

struct BoxResult {
    ComplexRectangle rect;
    int zero_count = 0;        // zeros inside (pole contribution removed)
    bool inconclusive = false;
};

struct ExceptionalScan {
    std::vector<double> real_zeros;  // zeros of L(f,sigma) found in [3/4, 1)
    int count_in_segment = 0;        // of those, inside [1 - c2/log q(f), 1)
    double segment_lo = 0.0;
};

struct CertificationReport {
    std::string instance;
    double c_used = 0.0;   // the scanning (demo) constant
    double c_proof = 0.0;  // min{1/(400 C), c2} from the configured constants
    double t_max = 0.0;
    double analytic_conductor = 0.0;  // q(f)
    int degree = 0;
    ProofConstants constants;
    std::vector<BoxResult> boxes;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ZeroRecord> offending_zero;
    ExceptionalScan exceptional;
    bool conjugate_symmetric = false;  // negative t covered by symmetry
    double sigma_cap = 0.0;            // boxes stop here; Re(s) > 1 is zero-free by the
                                       // class axiom (absolutely convergent, zero-free)
};

// Winding number of L(f, .) around the rectangle boundary (zeros minus
// poles), by adaptive argument tracking with step halving until every
// phase increment is below pi/2. A pole at s = 1 inside the rectangle
// contributes -pole_order. Boundary zeros are handled by a deterministic
// outward perturbation sequence (1e-4, alternating sign), at most 5 tries.
int count_zeros(const LFunctionInstance& f, const ComplexRectangle& rect,
                const EvalConfig& cfg = {});

// All zeros inside rect, located by bisection of argument-principle boxes
// and polished by Newton. Multiplicity > 1 is reported, not split.
std::vector<ZeroRecord> locate_zeros(const LFunctionInstance& f, const ComplexRectangle& rect,
                                     const EvalConfig& cfg = {});

// Newton iteration s <- s - L/L' from the seed; requires the 0.1-side box
// around the seed to contain exactly one zero. Throws RefinementError on
// divergence or escape.
ZeroRecord refine_zero(const LFunctionInstance& f, std::complex<double> seed,
                       const EvalConfig& cfg = {});

// Sign changes of L(f, sigma) on [3/4, 1 - 1e-3], grid step 1e-4, refined
// by bisection to 1e-10. Real-coefficient instances only; complex ones go
// through a thin argument-principle box instead (used by certify_region).
std::vector<double> real_segment_scan(const LFunctionInstance& f, const EvalConfig& cfg = {});

// Tiles { sigma >= region_boundary(f,c,t) - 1e-3, |t| <= T } with boxes of
// height <= 1 (conservative covering of the curved boundary), counts zeros
// per box, scans the real segment for the exceptional clause, and issues
// the verdict. Gate: validated nonnegativity and d < log q(f).
CertificationReport certify_region(const LFunctionInstance& f, double c, double t_max,
                                   const EvalConfig& cfg = {}, const ProofConstants& consts = {},
                                   int threads = 1);

}  // namespace zfr
