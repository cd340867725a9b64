// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_expr.hpp"
#include "unip/class_table.hpp"
#include "unip/classical.hpp"
#include "unip/ext_classify.hpp"
#include "unip/jordan_calculus.hpp"
#include "unip/oracle.hpp"
#include "unip/parser.hpp"
#include "unip/root_data.hpp"
#include "unip/sweeps.hpp"

using namespace unip;

namespace {

const char *const kAdjoint = "L(14)+T(10)+V(10)+V(10)^*+T(6)+L(4)+L(4)+L(0)";

// Collects failed checks for one criterion.
struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string &what) {
        if (!ok)
            failures.push_back(what);
    }
    template <class A, class B> void equal(const A &got, const B &want, const std::string &what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << ": got " << show(got) << ", want " << show(want);
            failures.push_back(s.str());
        }
    }
    void sweep(const SweepReport &r, const std::string &what) {
        if (!r.ok())
            failures.push_back(what + ": " + std::to_string(r.mismatches.size()) + " mismatches, first: " +
                               r.mismatches.front());
        if (r.cases == 0)
            failures.push_back(what + ": no cases");
    }

  private:
    static std::string show(const JordanType &t) { return t.to_string(); }
    static std::string show(const std::string &s) { return s; }
    template <class T> static std::string show(const T &v) {
        std::ostringstream s;
        s << v;
        return s.str();
    }
};

struct Timed {
    std::string label;
    double limit; // seconds; 0 = none
};

int failures = 0;

void criterion(int n, const std::string &title, std::vector<Timed> limits,
               const std::function<std::vector<double>(Checker &)> &body) {
    Checker c;
    std::vector<double> times;
    const auto start = std::chrono::steady_clock::now();
    try {
        times = body(c);
    } catch (const std::exception &e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < limits.size() && i < times.size(); ++i) {
        timing << ' ' << limits[i].label << '=' << times[i] << 's';
        if (limits[i].limit > 0 && times[i] >= limits[i].limit)
            c.failures.push_back(limits[i].label + " took " + std::to_string(times[i]) + "s, limit " +
                                 std::to_string(limits[i].limit) + "s");
    }
    const bool ok = c.failures.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << std::fixed
              << std::setprecision(3) << total << "s" << timing.str() << "]\n";
    for (const auto &f : c.failures)
        std::cout << "    " << f << '\n';
    std::cout.flush();
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <class F> double timed(F &&f) {
    const auto t = std::chrono::steady_clock::now();
    f();
    return seconds_since(t);
}

} // namespace

int main() {
    criterion(1, "E6 adjoint decomposition identifies class A_4", {{"identify", 0.1}}, [](Checker &c) {
        const auto table = load_class_table(UNIP_DATA_DIR "/classes.tsv");
        ExprIdentification r;
        const double t = timed([&] { r = identify_from_expr(table, "E6", 5, *parse_expr(kAdjoint)); });
        c.equal(r.evaluation.jordan.to_string(), std::string("5^15 1^3"), "Jordan type");
        c.expect(r.result.label.has_value(), "label found");
        if (r.result.label)
            c.equal(*r.result.label, std::string("A_4"), "label");
        c.expect(r.warnings.empty(), "no dimension warning");
        return std::vector<double>{t};
    });

    criterion(2, "summand Jordan types of the E6 adjoint decomposition", {}, [](Checker &c) {
        const auto jt = [](const char *s) { return eval_expr(*parse_expr(s), 5); };
        c.equal(jt("L(14)").jordan, JordanType::parse("5^3"), "L(14)");
        c.equal(jt("T(10)").jordan, JordanType::parse("5^4"), "T(10)");
        c.equal(jt("T(10)").dim, std::int64_t{20}, "dim T(10)");
        c.equal(jt("V(10)").jordan, JordanType::parse("5^2 1"), "V(10)");
        c.equal(jt("V(10)^*").jordan, JordanType::parse("5^2 1"), "V(10)^*");
        c.equal(jt("T(6)").jordan, JordanType::parse("5^2"), "T(6)");
        c.equal(jt("L(4)").jordan, JordanType{5}, "L(4)");
        c.equal(jt("L(0)").jordan, JordanType{1}, "L(0)");
        return std::vector<double>{};
    });

    criterion(3, "F4, G2, E7, D6 and B_{l-1} reproductions", {}, [](Checker &c) {
        // F4 at p = 3.
        c.equal(qm_structure(RootSystem::parse("F4"), 3).dim_tilting, std::int64_t{27}, "F4 dim T(omega_4)");
        c.expect(is_distinguished(ClassicalGroup::SO, 3, JordanType{3, 9, 15}, 27).distinguished,
                 "J3+J9+J15 distinguished in SO27");
        // G2 at p = 2.
        const auto g2 = lift_quotient_to_orthogonal(JordanType{6});
        c.equal(g2, JordanType{2, 6}, "G2 lift");
        c.expect(is_distinguished(ClassicalGroup::Sp, 2, g2, 8).distinguished, "J2+J6 distinguished in Sp8");
        c.equal(qm_structure(RootSystem::parse("G2"), 2).dim_tilting, std::int64_t{8}, "G2 dim T(omega_1)");
        // E7 at p = 2.
        const auto e7 = lift_quotient_to_orthogonal(JordanType{8, 10, 16, 18, 22, 26, 32});
        c.equal(e7, JordanType{2, 8, 10, 16, 18, 22, 26, 32}, "E7 lift");
        c.expect(is_distinguished(ClassicalGroup::Sp, 2, e7, 134).distinguished, "E7 type distinguished in Sp134");
        c.equal(qm_structure(RootSystem::parse("E7"), 2).dim_tilting, std::int64_t{134}, "E7 dim T(omega_1)");
        // D6 at p = 2.
        const auto d6 = JordanType::parse("2^2 6 8 10^2 14 16");
        c.expect(is_distinguished(ClassicalGroup::Sp, 2, d6, 68).distinguished, "D6 type distinguished in Sp68");
        const auto q = qm_structure(RootSystem::parse("D6"), 2);
        c.expect(q.weyl_structure == WeylStructure::TwoTrivial, "D6 p=2 TwoTrivial");
        c.equal(q.dim_tilting, std::int64_t{68}, "D6 dim T");
        // Regular elements of B_{l-1} in Sp_{2l}.
        for (int l = 2; l <= 20; ++l)
            c.equal(bminus1_family(l).lifted, JordanType{2, 2 * l - 2}, "bminus1_family(" + std::to_string(l) + ")");
        return std::vector<double>{};
    });

    criterion(4, "formulas agree with the matrix oracle",
              {{"tensor", 10}, {"weyl", 30}, {"irrep", 60}}, [](Checker &c) {
                  std::vector<double> t;
                  SweepReport r;
                  t.push_back(timed([&] { r = sweep_tensor({2, 3, 5, 7, 11}); }));
                  c.sweep(r, "tensor sweep");
                  t.push_back(timed([&] { r = sweep_weyl(400, {2, 3, 5, 7}); }));
                  c.sweep(r, "weyl sweep");
                  t.push_back(timed([&] { r = sweep_irrep(4096, {2, 3, 5, 7}, 6, 256); }));
                  c.sweep(r, "irrep sweep");
                  // p = 2 needs more digits to reach dimension 4096.
                  const auto extra = sweep_irrep(4096, {2}, 13, 256);
                  c.sweep(extra, "irrep sweep p=2, 13 digits");
                  return t;
              });

    criterion(5, "Ext^1 criterion on the weight grid", {{"ext", 60}}, [](Checker &c) {
        for (std::int64_t p : {2, 3, 5, 7})
            for (std::int64_t cc = p; cc <= 2 * p - 2; ++cc)
                c.expect(ext1_nonzero(cc, 2 * p - 2 - cc, p),
                         "ext(" + std::to_string(cc) + ", " + std::to_string(2 * p - 2 - cc) + ") p=" + std::to_string(p));
        SweepReport r;
        const double t = timed([&] { r = sweep_ext(3000, {2, 3, 5, 7}); });
        c.sweep(r, "symmetry and self-extension sweep");
        return std::vector<double>{t};
    });

    criterion(6, "extension, indecomposable and semisimplicity classification", {}, [](Checker &c) {
        const auto w = nonsplit_ext_classify(6, 2, 5);
        c.equal(w.to_string(), std::string("WeylTwist(6, 0)"), "(6,2,5)");
        c.equal(w.jordan, JordanType{5, 2}, "(6,2,5) Jordan");
        const auto d = nonsplit_ext_classify(2, 6, 5);
        c.equal(d.to_string(), std::string("DualWeylTwist(6, 0)"), "(2,6,5)");
        c.equal(d.jordan, JordanType{5, 2}, "(2,6,5) Jordan");

        const auto fams = classify_dim4_p2();
        c.equal(fams.size(), std::size_t{3}, "three dim-4 families");
        for (const auto &f : fams)
            for (int n = 0; n < 3; ++n)
                c.equal(eval_expr(*f.instantiate(n, n + 1), 2).jordan, JordanType{2, 2}, "family " + f.label);
        if (fams.size() == 3) {
            c.equal(fams[0].templ, std::string("L(1)[n]*L(1)[m]"), "(i) template");
            c.equal(fams[1].templ, std::string("L(1)[n]+L(1)[m]"), "(ii) template");
            c.equal(render(*fams[2].instantiate(0, 0)), std::string("T(2)"), "(iii) at n=0");
            c.equal(oracle_eval(*fams[0].instantiate(0, 1), 2).jordan, JordanType{2, 2}, "(i) oracle");
        }

        const auto ind = enumerate_indecomposables(JordanType{5, 2}, 5);
        c.equal(ind.size(), std::size_t{2}, "J5+J2 family count");
        int weyl = 0, dual = 0, irr = 0;
        for (const auto &f : ind) {
            weyl += f.kind == FamilyKind::Weyl && f.c == 6;
            dual += f.kind == FamilyKind::DualWeyl && f.c == 6;
            irr += f.kind == FamilyKind::Irreducible;
        }
        c.expect(weyl == 1 && dual == 1 && irr == 0, "J5+J2: V(6)[l] and V(6)^*[l] only");

        std::mt19937_64 rng(2718);
        const std::int64_t primes[] = {2, 3, 5, 7};
        for (int i = 0; i < 1000; ++i) {
            const auto p = primes[rng() % 4];
            JordanType t;
            const auto blocks = 1 + rng() % 8;
            for (std::uint64_t b = 0; b < blocks; ++b)
                t.add(1 + static_cast<std::int64_t>(rng() % p));
            const bool self_dual = rng() % 2;
            const bool forced = t.max_block() < p || (self_dual && t.multiplicity(p) <= 1);
            const bool got = semisimplicity_verdict(t, self_dual, p) == SemisimplicityVerdict::ForcedSemisimple;
            c.expect(got == forced, "semisimplicity of " + t.to_string() + " p=" + std::to_string(p));
        }
        return std::vector<double>{};
    });

    criterion(7, "tilting modules", {}, [](Checker &c) {
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (std::int64_t cc = p; cc <= 2 * p - 2; ++cc)
                c.equal(tilting_dim(cc, p), 2 * p, "tilting_dim(" + std::to_string(cc) + ", " + std::to_string(p) + ")");
            for (std::int64_t cc = p - 1; cc <= 200; ++cc)
                c.expect(tilting_dim(cc, p) % p == 0,
                         "p | tilting_dim(" + std::to_string(cc) + ", " + std::to_string(p) + ")");
            for (std::int64_t r = 0; r <= p - 1; ++r) {
                const auto e = make_tensor(L(p - 1), L(r));
                c.equal(oracle_eval(*e, static_cast<std::uint32_t>(p)).jordan, scale(JordanType{p}, r + 1),
                        render(*e) + " free at p=" + std::to_string(p));
            }
        }
        c.equal(tilting_dim(10, 5), std::int64_t{20}, "tilting_dim(10, 5)");
        return std::vector<double>{};
    });

    criterion(8, "Weyl dimension formula", {}, [](Checker &c) {
        const auto w = [](const char *g, std::size_t i) {
            const auto rs = RootSystem::parse(g);
            Weight x(static_cast<std::size_t>(rs.rank()), 0);
            x[i - 1] = 1;
            return weyl_dim(rs, x);
        };
        c.equal(w("F4", 4), std::int64_t{26}, "F4 omega_4");
        c.equal(w("E7", 1), std::int64_t{133}, "E7 omega_1");
        c.equal(w("E6", 2), std::int64_t{78}, "E6 adjoint");
        c.equal(w("G2", 1), std::int64_t{7}, "G2 omega_1");
        c.equal(w("E8", 8), std::int64_t{248}, "E8 omega_8");
        for (std::int64_t l = 1; l <= 12; ++l) {
            const auto name = [&](char t) { return std::string(1, t) + std::to_string(l); };
            const auto qm = [&](char t) {
                const auto rs = RootSystem::parse(name(t));
                return weyl_dim(rs, quasi_minuscule_weight(rs));
            };
            c.equal(w(name('A').c_str(), 1), l + 1, name('A') + " omega_1");
            c.equal(qm('A'), l * l + 2 * l, name('A') + " quasi-minuscule");
            if (l >= 2) {
                c.equal(w(name('B').c_str(), 1), 2 * l + 1, name('B') + " omega_1");
                c.equal(qm('B'), 2 * l + 1, name('B') + " quasi-minuscule");
                c.equal(w(name('C').c_str(), 1), 2 * l, name('C') + " omega_1");
                c.equal(qm('C'), 2 * l * l - l - 1, name('C') + " quasi-minuscule");
            }
            if (l >= 4) {
                c.equal(w(name('D').c_str(), 1), 2 * l, name('D') + " omega_1");
                c.equal(qm('D'), 2 * l * l - l, name('D') + " quasi-minuscule");
            }
        }
        return std::vector<double>{};
    });

    criterion(9, "expression parser", {}, [](Checker &c) {
        std::mt19937_64 rng(9);
        int bad = 0;
        for (std::int64_t i = 0; i < 10000; ++i) {
            testing::ExprSampler sample{i % 2 ? 5 : 2, 6, 120, std::int64_t{1} << 40, true, 4};
            const auto e = sample(rng);
            const auto text = render(*e);
            if (!equal(*parse_expr(text), *e) && bad++ < 3)
                c.expect(false, "round trip of " + text);
        }
        c.equal(bad, 0, "round-trip failures");

        const auto e = parse_expr(kAdjoint);
        std::vector<ExprPtr> parts;
        ExprPtr cur = e;
        while (auto s = cur->as<ModuleExpr::Sum>()) {
            parts.insert(parts.begin(), s->right);
            cur = s->left;
        }
        parts.insert(parts.begin(), cur);
        const std::vector<ExprPtr> want = {L(14), T(10), V(10), make_dual(V(10)), T(6), L(4), L(4), L(0)};
        c.equal(parts.size(), want.size(), "summand count");
        for (std::size_t i = 0; i < want.size() && i < parts.size(); ++i)
            c.expect(equal(*parts[i], *want[i]), "summand " + std::to_string(i + 1) + " is " + render(*want[i]));
        return std::vector<double>{};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
