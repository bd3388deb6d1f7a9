#include "zfr/scanner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <thread>

#include "zfr/errors.hpp"

namespace zfr {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryAbsFloor = 1e-8;   // |L| below this on the contour: perturb
constexpr double kPoleClearance = 1e-3;

double point_segment_distance(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

std::array<Complex, 4> corners(const ComplexRectangle& r) {
    return {Complex{r.sigma_min, r.t_min}, Complex{r.sigma_max, r.t_min},
            Complex{r.sigma_max, r.t_max}, Complex{r.sigma_min, r.t_max}};
}

bool pole_strictly_inside(const ComplexRectangle& r) {
    return r.sigma_min < 1.0 && 1.0 < r.sigma_max && r.t_min < 0.0 && 0.0 < r.t_max;
}

struct BoundaryZeroSuspicion {
    Complex where;
};

// Total argument variation of L(f, .) counterclockwise around the
// rectangle. Phase increments are tracked sample to sample and each
// segment is halved until its increment is below `phase_cap`.
double argument_variation(const LFunctionInstance& f, const ComplexRectangle& rect,
                          const EvalConfig& cfg, double phase_cap, double init_step) {
    auto cs = corners(rect);
    auto eval = [&](Complex z) {
        Complex v = l_value(f, z, cfg);
        if (std::abs(v) < kBoundaryAbsFloor) throw BoundaryZeroSuspicion{z};
        return v;
    };

    double total = 0.0;
    long evals = 0;
    for (int e = 0; e < 4; ++e) {
        Complex a = cs[e], b = cs[(e + 1) % 4];
        double len = std::abs(b - a);
        int n0 = std::max(2, static_cast<int>(std::ceil(len / init_step)));
        // segment stack of (z1, v1, z2, v2)
        struct Seg {
            Complex z1, z2;
            Complex v1, v2;
        };
        std::vector<Seg> stack;
        Complex prev_z = a, prev_v = eval(a);
        ++evals;
        for (int i = 1; i <= n0; ++i) {
            Complex z = a + (b - a) * (static_cast<double>(i) / n0);
            Complex v = eval(z);
            ++evals;
            stack.push_back({prev_z, z, prev_v, v});
            prev_z = z;
            prev_v = v;
        }
        // LIFO processing keeps the order irrelevant: increments just add up
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            double dphi = std::arg(s.v2 / s.v1);
            if (std::abs(dphi) < phase_cap) {
                total += dphi;
                continue;
            }
            if (std::abs(s.z2 - s.z1) < 1e-9) throw BoundaryZeroSuspicion{s.z1};
            if (++evals > 500000)
                throw InconclusiveError("count_zeros: argument tracking exceeded the "
                                        "evaluation budget");
            Complex zm = 0.5 * (s.z1 + s.z2);
            Complex vm = eval(zm);
            stack.push_back({s.z1, zm, s.v1, vm});
            stack.push_back({zm, s.z2, vm, s.v2});
        }
    }
    return total;
}

ComplexRectangle perturbed(const ComplexRectangle& r, int attempt) {
    if (attempt == 0) return r;
    // deterministic alternating sequence: +1e-4, -1e-4, +2e-4, -2e-4, +3e-4
    int k = (attempt + 1) / 2;
    double delta = 1e-4 * k * ((attempt % 2) ? 1.0 : -1.0);
    return {r.sigma_min - delta, r.sigma_max + delta, r.t_min - delta, r.t_max + delta};
}

int winding_number(const LFunctionInstance& f, const ComplexRectangle& rect,
                   const EvalConfig& cfg) {
    bool unsettled = false;
    for (int attempt = 0; attempt < 6; ++attempt) {
        ComplexRectangle r = perturbed(rect, attempt);
        try {
            double total = argument_variation(f, r, cfg, kPi / 2.0, 0.25);
            double w = total / (2.0 * kPi);
            if (std::abs(w - std::round(w)) > 0.25) {
                // one denser retry before perturbing
                total = argument_variation(f, r, cfg, kPi / 4.0, 0.1);
                w = total / (2.0 * kPi);
                if (std::abs(w - std::round(w)) > 0.25) {
                    unsettled = true;
                    continue;
                }
            }
            return static_cast<int>(std::lround(w));
        } catch (const BoundaryZeroSuspicion&) {
            continue;  // next perturbation
        }
    }
    throw InconclusiveError(unsettled
                                ? "count_zeros: winding did not settle on an integer after 5 "
                                  "perturbation retries"
                                : "count_zeros: |L| stayed below 1e-8 on the boundary after 5 "
                                  "perturbation retries");
}

}  // namespace

void ComplexRectangle::validate(int pole_order) const {
    if (!(sigma_min < sigma_max) || !(t_min < t_max))
        throw DomainError("ComplexRectangle: requires sigma_min < sigma_max and t_min < t_max");
    if (pole_order >= 1) {
        auto cs = corners(*this);
        for (int e = 0; e < 4; ++e)
            if (point_segment_distance({1.0, 0.0}, cs[e], cs[(e + 1) % 4]) < kPoleClearance)
                throw DomainError("ComplexRectangle: boundary must stay 1e-3 away from s = 1 "
                                  "when the instance has a pole");
    }
}

int count_zeros(const LFunctionInstance& f, const ComplexRectangle& rect, const EvalConfig& cfg) {
    rect.validate(f.pole_order);
    return winding_number(f, rect, cfg);
}

namespace {

// Split the longer side at the given fraction; nudge the cut away from
// s = 1 if needed.
std::pair<ComplexRectangle, ComplexRectangle> split_rect_at(const ComplexRectangle& r,
                                                            int pole_order, double frac) {
    double dw = r.sigma_max - r.sigma_min;
    double dh = r.t_max - r.t_min;
    if (dw >= dh) {
        double cut = r.sigma_min + frac * dw;
        if (pole_order >= 1 && std::abs(cut - 1.0) < 1.5 * kPoleClearance &&
            r.t_min < 1.5 * kPoleClearance && r.t_max > -1.5 * kPoleClearance)
            cut += 2.0 * kPoleClearance;
        return {{r.sigma_min, cut, r.t_min, r.t_max}, {cut, r.sigma_max, r.t_min, r.t_max}};
    }
    double cut = r.t_min + frac * dh;
    if (pole_order >= 1 && std::abs(cut) < 1.5 * kPoleClearance && r.sigma_min < 1.0 + 1.5 * kPoleClearance &&
        r.sigma_max > 1.0 - 1.5 * kPoleClearance)
        cut += 2.0 * kPoleClearance;
    return {{r.sigma_min, r.sigma_max, r.t_min, cut}, {r.sigma_min, r.sigma_max, cut, r.t_max}};
}

int zeros_inside(const LFunctionInstance& f, const ComplexRectangle& rect, const EvalConfig& cfg) {
    int w = count_zeros(f, rect, cfg);
    if (pole_strictly_inside(rect)) w += f.pole_order;
    return w;
}

// n_known is the parent's established count; the children must agree with
// it or the cut sits on a zero and is moved.
void locate_rec(const LFunctionInstance& f, const ComplexRectangle& rect, int n_known,
                const EvalConfig& cfg, std::vector<ZeroRecord>& out, int depth) {
    if (n_known == 0) return;
    double diag = std::hypot(rect.sigma_max - rect.sigma_min, rect.t_max - rect.t_min);
    Complex center{0.5 * (rect.sigma_min + rect.sigma_max), 0.5 * (rect.t_min + rect.t_max)};
    if (n_known == 1 && diag < 0.05) {
        try {
            out.push_back(refine_zero(f, center, cfg));
            return;
        } catch (const RefinementError&) {
            // fall through to further bisection
        }
    }
    if (diag < 1e-6 || depth > 60) {
        ZeroRecord rec;
        rec.rho = center;
        rec.multiplicity = n_known;
        rec.refine_error = diag;
        rec.method = ZeroMethod::ArgumentPrinciple;
        out.push_back(rec);
        return;
    }
    for (double frac : {0.5, 0.5678, 0.4322, 0.61, 0.39}) {
        auto [left, right] = split_rect_at(rect, f.pole_order, frac);
        int nl = zeros_inside(f, left, cfg);
        int nr = zeros_inside(f, right, cfg);
        if (nl + nr != n_known) continue;  // a zero straddles this cut
        locate_rec(f, left, nl, cfg, out, depth + 1);
        locate_rec(f, right, nr, cfg, out, depth + 1);
        return;
    }
    throw InconclusiveError("locate_zeros: a zero sat on every tried bisection cut");
}

}  // namespace

std::vector<ZeroRecord> locate_zeros(const LFunctionInstance& f, const ComplexRectangle& rect,
                                     const EvalConfig& cfg) {
    rect.validate(f.pole_order);
    std::vector<ZeroRecord> out;
    locate_rec(f, rect, zeros_inside(f, rect, cfg), cfg, out, 0);
    std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.rho.imag() != b.rho.imag()) return a.rho.imag() < b.rho.imag();
        return a.rho.real() < b.rho.real();
    });
    return out;
}

ZeroRecord refine_zero(const LFunctionInstance& f, Complex seed, const EvalConfig& cfg) {
    ComplexRectangle box{seed.real() - 0.05, seed.real() + 0.05, seed.imag() - 0.05,
                         seed.imag() + 0.05};
    int n;
    try {
        n = zeros_inside(f, box, cfg);
    } catch (const InconclusiveError& e) {
        throw RefinementError(std::string("refine_zero: seed box inconclusive: ") + e.what());
    }
    if (n != 1)
        throw RefinementError("refine_zero: the 0.1-side box around the seed contains " +
                              std::to_string(n) + " zeros, need exactly 1");
    Complex s = seed;
    for (int it = 0; it < 50; ++it) {
        Complex lv = l_value(f, s, cfg);
        Complex ld = l_deriv(f, s, cfg);
        if (std::abs(ld) < 1e-14)
            throw RefinementError("refine_zero: derivative vanished during Newton iteration");
        Complex step = lv / ld;
        s -= step;
        if (std::abs(s - seed) > 0.15)
            throw RefinementError("refine_zero: Newton escaped the seed box");
        if (std::abs(step) < 1e-10) {
            ZeroRecord rec;
            rec.rho = s;
            rec.multiplicity = 1;
            rec.refine_error = std::abs(step);
            rec.method = ZeroMethod::NewtonRefined;
            return rec;
        }
    }
    throw RefinementError("refine_zero: Newton did not converge in 50 iterations");
}

std::vector<double> real_segment_scan(const LFunctionInstance& f, const EvalConfig& cfg) {
    if (!is_real_coefficient(f.coeff_source))
        throw DomainError("real_segment_scan: instance has complex coefficients; scan the "
                          "segment with a thin box instead (certify_region does)");
    const double lo = 0.75, hi = 1.0 - 1e-3, step = 1e-4;
    auto value = [&](double sigma) { return l_value(f, {sigma, 0.0}, cfg).real(); };

    std::vector<double> zeros;
    double prev_x = lo, prev_v = value(lo);
    if (prev_v == 0.0) zeros.push_back(lo);
    for (double x = lo + step; x <= hi + 0.5 * step; x += step) {
        double xx = std::min(x, hi);
        double v = value(xx);
        if (v == 0.0) {
            zeros.push_back(xx);
        } else if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
            double a = prev_x, b = xx, fa = prev_v;
            for (int it = 0; it < 60 && (b - a) > 1e-10; ++it) {
                double m = 0.5 * (a + b);
                double fm = value(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0)) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
        prev_x = xx;
        prev_v = v;
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

namespace {

void run_parallel(std::size_t jobs, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || jobs <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(jobs));
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

CertificationReport certify_region(const LFunctionInstance& f, double c, double t_max,
                                   const EvalConfig& cfg, const ProofConstants& consts,
                                   int threads) {
    consts.validate();
    if (!(c > 0.0)) throw DomainError("certify_region: c must be positive");
    if (!(t_max > 0.0 && t_max <= 60.0))
        throw DomainError("certify_region: T must lie in (0, 60] (desk-scale cap)");

    auto axioms = validate_class_axioms(f, 2000);
    if (!axioms.admissible())
        throw GateError("certify_region: instance '" + f.name + "' failed class-axiom validation");
    if (!axioms.nonnegative)
        throw GateError("certify_region: instance '" + f.name +
                        "' failed the nonnegativity gate (Re Lambda_f(n) < 0 at n = " +
                        std::to_string(axioms.min_re_at) + ")");
    check_degree_vs_conductor(f);

    CertificationReport rep;
    rep.instance = f.name;
    rep.c_used = c;
    rep.c_proof = consts.c();
    rep.t_max = t_max;
    rep.analytic_conductor = analytic_conductor(f);
    rep.degree = f.degree;
    rep.constants = consts;
    rep.conjugate_symmetric = is_real_coefficient(f.coeff_source);
    rep.sigma_cap = 1.05;

    const double margin = 1e-3;
    // The boundary 1 - c/log(q(f)(|t|+3)^d) rises toward 1 as |t| grows, so a
    // box is a conservative cover when its sigma_min is the boundary at the
    // box ordinate closest to 0, minus the margin.
    auto sigma_lo_for = [&](double t_closest) {
        double b = region_boundary(f, c, t_closest) - margin;
        if (b > 1.0 - 2.0 * kPoleClearance) b = 1.0 - 2.0 * kPoleClearance;
        return b;
    };

    std::vector<ComplexRectangle> boxes;
    double half0 = std::min(0.5, t_max);
    boxes.push_back({sigma_lo_for(0.0), rep.sigma_cap, -half0, half0});
    for (double t_lo = half0; t_lo < t_max; t_lo += 1.0) {
        double t_hi = std::min(t_lo + 1.0, t_max);
        boxes.push_back({sigma_lo_for(t_lo), rep.sigma_cap, t_lo, t_hi});
        if (!rep.conjugate_symmetric)
            boxes.push_back({sigma_lo_for(t_lo), rep.sigma_cap, -t_hi, -t_lo});
    }

    rep.boxes.assign(boxes.size(), BoxResult{});
    run_parallel(boxes.size(), threads, [&](std::size_t i) {
        BoxResult br;
        br.rect = boxes[i];
        try {
            br.zero_count = zeros_inside(f, boxes[i], cfg);
        } catch (const InconclusiveError&) {
            br.inconclusive = true;
        }
        rep.boxes[i] = br;
    });

    bool any_inconclusive = false;
    for (const auto& br : rep.boxes) {
        any_inconclusive = any_inconclusive || br.inconclusive;
        if (!br.inconclusive && br.zero_count != 0) {
            auto found = locate_zeros(f, br.rect, cfg);
            if (!found.empty()) rep.offending_zero = found.front();
            rep.verdict = Verdict::ZeroFound;
            return rep;
        }
    }
    if (any_inconclusive) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }

    // exceptional clause: real zeros in [1 - c2/log q(f), 1)
    if (rep.conjugate_symmetric) {
        rep.exceptional.real_zeros = real_segment_scan(f, cfg);
    } else {
        ComplexRectangle thin{0.75, 1.0 - 1.5 * kPoleClearance, -1e-3, 1e-3};
        for (const auto& z : locate_zeros(f, thin, cfg))
            rep.exceptional.real_zeros.push_back(z.rho.real());
    }
    rep.exceptional.segment_lo = 1.0 - consts.c2 / std::log(analytic_conductor(f));
    rep.exceptional.count_in_segment =
        exceptional_zero_capacity(f, consts.c2, rep.exceptional.real_zeros);

    if (rep.exceptional.count_in_segment > 1) {
        ZeroRecord rec;
        rec.rho = {rep.exceptional.real_zeros.front(), 0.0};
        rec.multiplicity = 1;
        rec.refine_error = 1e-10;
        rec.method = ZeroMethod::NewtonRefined;
        rep.offending_zero = rec;
        rep.verdict = Verdict::ZeroFound;
        return rep;
    }
    rep.verdict = Verdict::Certified;
    return rep;
}

}  // namespace zfr
