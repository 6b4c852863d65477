#include "bilindisc/verify.hpp"

#include "bilindisc/bilinear.hpp"
#include "bilindisc/errors.hpp"
#include "bilindisc/ideal.hpp"
#include "bilindisc/sparse3.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace bilindisc {

namespace {

// A trial returns an empty optional on success, a failure message otherwise.
using Trial = std::function<std::optional<std::string>(Sampler&)>;

CheckResult run_trials(std::string name, std::uint64_t check, const VerifyOptions& opt,
                       const Trial& trial) {
    const int count = std::max(opt.samples, 0);
    std::vector<std::optional<std::string>> outcome(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < count; t = next++) {
            Sampler sampler(opt.seed, (check << 32) + static_cast<std::uint64_t>(t));
            try {
                outcome[static_cast<std::size_t>(t)] = trial(sampler);
            } catch (const Error& e) {
                outcome[static_cast<std::size_t>(t)] = std::string("error: ") + e.what();
            }
        }
    };
    const int jobs = std::clamp(opt.jobs, 1, std::max(count, 1));
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    pool.clear();

    CheckResult r{std::move(name), true, std::to_string(count) + " trials"};
    for (int t = 0; t < count; ++t) {
        if (const auto& failure = outcome[static_cast<std::size_t>(t)]) {
            r.passed = false;
            r.detail = "trial " + std::to_string(t) + ": " + *failure;
            break;
        }
    }
    return r;
}

CheckResult single(std::string name, const std::function<std::optional<std::string>()>& check) {
    try {
        const auto failure = check();
        return {std::move(name), !failure.has_value(), failure.value_or("exact")};
    } catch (const Error& e) {
        return {std::move(name), false, std::string("error: ") + e.what()};
    }
}

std::optional<std::string> fail_if(bool bad, const std::string& message) {
    return bad ? std::optional<std::string>(message) : std::nullopt;
}

Rational nonzero(Sampler& s) { return s.nonzero_rational(); }

std::vector<CheckResult> suite_p11(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(single("p11: closed form equals elimination (symbolic)", [] {
        const auto sys = BilinearSystem::symbolic(1, 1);
        return fail_if(disc_p11(sys) != disc_via_elimination(sys), "polynomials differ");
    }));
    out.push_back(run_trials("p11: closed form equals elimination (random)", 1, opt,
                             [](Sampler& s) {
                                 const auto sys = BilinearSystem::random(1, 1, s);
                                 return fail_if(disc_p11(sys) != disc_via_elimination(sys),
                                                "values differ");
                             }));
    return out;
}

std::vector<CheckResult> suite_det3(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(single("det3: det(M) = eps * expanded (symbolic)", [] {
        const auto sys = ThreePlayerSystem::symbolic();
        return fail_if(disc_determinantal(sys) != MultiPoly(kDeterminantalSign) * disc_expanded(sys),
                       "polynomials differ");
    }));
    out.push_back(single("det3: elimination oracle equals expanded (symbolic)", [] {
        const auto sys = ThreePlayerSystem::symbolic();
        return fail_if(binary_form_discriminant(eliminate_to_quadratic(sys)) != disc_expanded(sys),
                       "polynomials differ");
    }));
    out.push_back(run_trials("det3: det(M) = eps * expanded (random)", 2, opt, [](Sampler& s) {
        const auto sys = ThreePlayerSystem::random(s);
        return fail_if(disc_determinantal(sys) != MultiPoly(kDeterminantalSign) * disc_expanded(sys),
                       "values differ");
    }));
    return out;
}

std::optional<std::string> rank_deficient_trial(int m, Sampler& s) {
    RationalVector u(m + 1);
    do {
        for (Index i = 0; i <= m; ++i) u(i) = s.integer(-5, 5);
    } while (u.isZero(0));
    const auto sys = rank_deficient_sample(1, m, Group::X, u, s);
    if (!disc_via_elimination(sys).is_zero()) return "elimination discriminant is nonzero";
    for (int rep = 0; rep < 5; ++rep) {
        std::map<VarRef, Rational> at{{VarRef::x(0), s.rational()}, {VarRef::x(1), s.rational()}};
        for (Index j = 0; j <= m; ++j) at[VarRef::y(static_cast<int>(j))] = u(j);
        for (int k = 0; k < sys.equation_count(); ++k) {
            if (!sys.equation(k).evaluate(at).is_zero()) {
                return "F_" + std::to_string(k) + " does not vanish at the kernel point";
            }
        }
    }
    return std::nullopt;
}

std::vector<CheckResult> suite_thm1(const VerifyOptions& opt) {
    return {
        run_trials("thm1: rank-deficient (1,1) has zero discriminant", 3, opt,
                   [](Sampler& s) { return rank_deficient_trial(1, s); }),
        run_trials("thm1: rank-deficient (1,2) has zero discriminant", 4, opt,
                   [](Sampler& s) { return rank_deficient_trial(2, s); }),
    };
}

TriRoot random_root(Sampler& s) {
    return TriRoot::make({nonzero(s), nonzero(s)}, {nonzero(s), nonzero(s)},
                         {nonzero(s), nonzero(s)});
}

std::vector<CheckResult> suite_lemma(const VerifyOptions& opt) {
    return {
        run_trials("lemma: degenerate iff discriminant vanishes (random)", 5, opt,
                   [](Sampler& s) {
                       const auto sys = ThreePlayerSystem::random(s);
                       return fail_if(quadratic_form_degenerate(sys) != disc_expanded(sys).is_zero(),
                                      "degeneracy and discriminant disagree");
                   }),
        run_trials("lemma: singular instances degenerate, root round-trip", 6, opt,
                   [](Sampler& s) -> std::optional<std::string> {
                       const TriRoot root = random_root(s);
                       const std::array<Rational, 3> lambda{nonzero(s), nonzero(s), nonzero(s)};
                       const auto sys = singular_instance(root, lambda, s);
                       if (!disc_expanded(sys).is_zero()) return "discriminant is nonzero";
                       if (!quadratic_form_degenerate(sys)) return "quadratic form is regular";
                       const auto witness = kernel_from_root(sys, root, lambda);
                       const auto back = root_from_kernel(sys, witness.u);
                       return fail_if(!(back.root == root), "round-trip changed the root");
                   }),
    };
}

std::vector<CheckResult> suite_euler(const VerifyOptions& opt) {
    return {
        run_trials("euler: bilinear equations", 7, opt,
                   [](Sampler& s) -> std::optional<std::string> {
                       const int n = static_cast<int>(s.integer(1, 3));
                       const int m = static_cast<int>(s.integer(1, 3));
                       const auto sys = BilinearSystem::random(n, m, s);
                       for (int k = 0; k < sys.equation_count(); ++k) {
                           const MultiPoly f = sys.equation(k);
                           MultiPoly ex, ey;
                           for (int i = 0; i <= n; ++i) {
                               ex += MultiPoly::variable(VarRef::x(i)) * f.derivative(VarRef::x(i));
                           }
                           for (int j = 0; j <= m; ++j) {
                               ey += MultiPoly::variable(VarRef::y(j)) * f.derivative(VarRef::y(j));
                           }
                           if (ex != f || ey != f) return "Euler identity fails";
                       }
                       return std::nullopt;
                   }),
        run_trials("euler: three-player equations", 8, opt,
                   [](Sampler& s) -> std::optional<std::string> {
                       const auto sys = ThreePlayerSystem::random(s);
                       const std::array<std::array<VarRef, 2>, 3> groups{
                           {{VarRef::x(1), VarRef::x(0)},
                            {VarRef::y(1), VarRef::y(0)},
                            {VarRef::z(1), VarRef::z(0)}}};
                       for (const auto& h : sys.equations()) {
                           for (const auto& g : groups) {
                               const int d = h.degree(g[0].group);
                               MultiPoly e;
                               for (const auto& v : g) e += MultiPoly::variable(v) * h.derivative(v);
                               if (e != MultiPoly(d) * h) return "Euler identity fails";
                           }
                       }
                       return std::nullopt;
                   }),
    };
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "p11", "det3", "thm1", "lemma", "euler"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    const bool all = suite == "all";
    if (all || suite == "p11") append(suite_p11(options));
    if (all || suite == "det3") append(suite_det3(options));
    if (all || suite == "thm1") append(suite_thm1(options));
    if (all || suite == "lemma") append(suite_lemma(options));
    if (all || suite == "euler") append(suite_euler(options));
    if (out.empty()) throw WrongShapeError("unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace bilindisc
