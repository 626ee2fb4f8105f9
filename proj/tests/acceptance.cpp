// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Exact integer checks throughout, no tolerances.

#include "lefib/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace lefib;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

CurveClass curve(const FiberSurface& fiber, std::initializer_list<long> coords) {
    IntVec v;
    for (long x : coords)
        v.emplace_back(x);
    return CurveClass::on(fiber, canonical_curve_name(HomologyClass(v)), v);
}

HomologyClass random_class(const FiberSurface& fiber, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    IntVec v(fiber.homology_rank());
    for (;;) {
        bool any = false;
        for (Int& x : v) {
            int t = d(rng);
            x = t;
            any = any || t != 0;
        }
        if (any)
            return HomologyClass(v);
    }
}

TwistWord random_word(const FiberSurface& fiber, std::mt19937_64& rng, std::size_t len) {
    TwistWord w;
    std::uniform_int_distribution<int> sgn(0, 1);
    for (std::size_t i = 0; i < len; ++i) {
        HomologyClass h = normalized_class(random_class(fiber, rng));
        w.letters.emplace_back(CurveClass::on(fiber, canonical_curve_name(h), h.coords),
                               sgn(rng) ? 1 : -1);
    }
    return w;
}

SymplecticMatrix random_symplectic(const FiberSurface& fiber, std::mt19937_64& rng) {
    return word_to_matrix(random_word(fiber, rng, 5), fiber);
}

TwistWord random_trivial_word(const FiberSurface& fiber, std::mt19937_64& rng, int pieces) {
    std::vector<std::string> names =
        fiber.genus == 1 ? std::vector<std::string>{"braid", "chain"}
                         : std::vector<std::string>{"braid", "chain", "lantern", "hyperelliptic"};
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    TwistWord out;
    for (int i = 0; i < pieces; ++i) {
        auto [lhs, rhs] = relation_library(names[pick(rng)], fiber);
        TwistWord piece = lhs.concat(rhs.inverse());
        SymplecticMatrix m = word_to_matrix(random_word(fiber, rng, 2), fiber).inverse();
        for (SignedTwist& t : piece.letters) {
            HomologyClass h = normalized_class(m.apply(t.curve.homology));
            t.curve = CurveClass::on(fiber, canonical_curve_name(h), h.coords);
        }
        out = out.concat(piece);
    }
    return out;
}

FibrationData random_sphere_fibration(int genus, std::mt19937_64& rng, int pieces = 1) {
    FiberSurface fiber(genus, 0);
    return make_fibration(fiber, BaseSurface(0, 0), random_trivial_word(fiber, rng, pieces));
}

FibrationData elliptic_e1() {
    FiberSurface torus(1, 0);
    TwistWord w;
    for (int i = 0; i < 6; ++i) {
        w.letters.emplace_back(curve(torus, {1, 0}), 1);
        w.letters.emplace_back(curve(torus, {0, 1}), 1);
    }
    return make_fibration(torus, BaseSurface(0, 0), w);
}

Presentation genus1_presentation() {
    FiberSurface torus(1, 0);
    Presentation p;
    p.fiber = torus;
    p.generators = {curve(torus, {1, 0}), curve(torus, {0, 1})};
    auto [braid_lhs, braid_rhs] = relation_library("braid", torus);
    auto [chain_lhs, chain_rhs] = relation_library("chain", torus);
    p.relator_names = {"braid", "chain"};
    p.relators = {braid_lhs.concat(braid_rhs.inverse()), chain_lhs};
    return p;
}

// --- criteria ---

void criterion1() {
    std::mt19937_64 rng(1001);
    std::string detail;
    bool ok = true;
    for (int g : {1, 2}) {
        FiberSurface fiber(g, 0);
        SymplecticMatrix id = SymplecticMatrix::identity(g);
        for (int i = 0; i < 25 && ok; ++i) {
            SymplecticMatrix a = random_symplectic(fiber, rng);
            SymplecticMatrix b = random_symplectic(fiber, rng);
            if (meyer_cocycle(id, b) != 0 || meyer_cocycle(a, id) != 0) {
                ok = false;
                detail = "degeneracy violated";
            }
        }
    }
    for (int i = 0; i < 100 && ok; ++i) {
        FiberSurface fiber(1 + i % 2, 0);
        SymplecticMatrix a = random_symplectic(fiber, rng);
        SymplecticMatrix b = random_symplectic(fiber, rng);
        SymplecticMatrix c = random_symplectic(fiber, rng);
        if (meyer_cocycle(a, b) + meyer_cocycle(a * b, c) !=
            meyer_cocycle(a, b * c) + meyer_cocycle(b, c)) {
            ok = false;
            detail = "cocycle identity violated";
        }
    }
    report(1, "meyer cocycle suite", ok, detail);
}

void criterion2() {
    std::string detail;
    bool ok = true;
    try {
        (void)calibrate_local_terms();
        FibrationData e1 = elliptic_e1();
        if (fibration_signature(e1) != -8) {
            ok = false;
            detail = "sigma(E(1)) != -8";
        }
        FibrationData e2 = e1;
        e2.lefschetz_word = e1.lefschetz_word.concat(e1.lefschetz_word);
        if (ok && fibration_signature(e2) != -16) {
            ok = false;
            detail = "sigma(E(2)) != -16";
        }
        if (ok && fibration_signature(reverse_orientation(e1)) != 8) {
            ok = false;
            detail = "sigma(-E(1)) != 8";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "calibration against E(1), K3 and reversal", ok, detail);
}

void criterion3() {
    std::string detail;
    bool ok = true;
    try {
        FiberSurface g2(2, 0);
        auto [lhs, rhs] = relation_library("lantern", g2);
        // host: a valid closed-base genus-2 word containing the rhs
        auto [hyp_lhs, hyp_rhs] = relation_library("hyperelliptic", g2);
        TwistWord host_word = hyp_lhs.concat(rhs).concat(rhs.inverse());
        TwistWord subst_word = hyp_lhs.concat(lhs).concat(rhs.inverse());
        FibrationData host = make_fibration(g2, BaseSurface(0, 0), host_word);
        FibrationData subst = make_fibration(g2, BaseSurface(0, 0), subst_word);
        if (!validate(host).ok() || !validate(subst).ok()) {
            ok = false;
            detail = "fixtures fail validation";
        } else {
            Int dsigma = fibration_signature(subst) - fibration_signature(host);
            auto [hp, hm] = critical_counts(host);
            auto [sp, sm] = critical_counts(subst);
            long deta = (sp - sm) - (hp - hm);
            if (deta != 1 || dsigma != -1) {
                std::ostringstream os;
                os << "deta=" << deta << " dsigma=" << dsigma;
                detail = os.str();
                ok = false;
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(3, "lantern substitution: unit deltas of opposite sign", ok, detail);
}

void criterion4() {
    std::mt19937_64 rng(1004);
    std::string detail;
    bool ok = true;
    try {
        int moves = 0;
        while (moves < 200 && ok) {
            int g = 1 + moves % 2;
            FibrationData f = random_sphere_fibration(g, rng);
            Int sigma = fibration_signature(f);
            Int e = eta(make_class(g, {f}));
            long chi = euler_characteristic(f);
            for (int j = 0; j < 5 && moves < 200 && ok; ++j, ++moves) {
                if (moves % 3 == 2) {
                    f = conjugate_fibration(f, random_word(f.fiber, rng, 2));
                } else {
                    std::uniform_int_distribution<std::size_t> pos(0, f.lefschetz_word.size() - 2);
                    f = hurwitz_move(f, pos(rng),
                                     (moves % 2) ? HurwitzDirection::left : HurwitzDirection::right);
                }
                if (fibration_signature(f) != sigma || eta(make_class(g, {f})) != e ||
                    euler_characteristic(f) != chi) {
                    ok = false;
                    detail = "sigma/eta/chi changed under a move";
                }
            }
        }
        for (int i = 0; i < 50 && ok; ++i) {
            int g = 1 + i % 2;
            FibrationData f = random_sphere_fibration(g, rng);
            Int sigma = fibration_signature(f);
            Int e = eta(make_class(g, {f}));
            HomologyClass h = normalized_class(random_class(f.fiber, rng));
            CurveClass c = CurveClass::on(f.fiber, canonical_curve_name(h), h.coords);
            std::uniform_int_distribution<std::size_t> pos(0, f.lefschetz_word.size());
            auto it = f.lefschetz_word.letters.begin() + static_cast<std::ptrdiff_t>(pos(rng));
            it = f.lefschetz_word.letters.insert(it, SignedTwist(c, -1));
            f.lefschetz_word.letters.insert(it, SignedTwist(c, 1));
            if (fibration_signature(f) != sigma || eta(make_class(g, {f})) != e) {
                ok = false;
                detail = "cancelling pair changed sigma or eta";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(4, "cobordism invariance under moves and cancelling pairs", ok, detail);
}

void criterion5() {
    std::mt19937_64 rng(1005);
    std::string detail;
    bool ok = true;
    try {
        for (int i = 0; i < 50 && ok; ++i) {
            int g = 1 + i % 2;
            FibrationData f1 = random_sphere_fibration(g, rng);
            FibrationData f2 = random_sphere_fibration(g, rng);
            TwistWord h = random_word(f1.fiber, rng, 2);
            FibrationData sum = fiber_sum(f1, f2, h);
            CobordismClass c1 = make_class(g, {f1});
            CobordismClass c2 = make_class(g, {f2});
            CobordismClass cs = class_sum(c1, c2);
            bool fiber_ok = fibration_signature(sum) == fibration_signature(f1) + fibration_signature(f2) &&
                            eta(make_class(g, {sum})) == eta(c1) + eta(c2);
            bool class_ok = sigma_class(cs) == sigma_class(c1) + sigma_class(c2) &&
                            eta(cs) == eta(c1) + eta(c2);
            if (!fiber_ok || !class_ok) {
                ok = false;
                detail = fiber_ok ? "class_sum not additive" : "fiber_sum not additive";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "additivity of sigma and eta", ok, detail);
}

void criterion6() {
    std::string detail;
    bool ok = true;
    try {
        UniversalData2 u = build_universal_dim2(genus1_presentation());
        if (u.h2_rank != 2) {
            ok = false;
            detail = "h2_rank != 2";
        }
        if (ok && !u.torus_amendment) {
            ok = false;
            detail = "torus amendment missing";
        }
        if (ok && !universality_report_dim2(u).all_ok()) {
            ok = false;
            detail = "universality report not all-pass";
        }
        if (ok && !cobordism_image_report(u).lattice.contains(-8, 12)) {
            ok = false;
            detail = "lattice misses (-8, 12)";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "universal builder on the genus-1 presentation", ok, detail);
}

// Independent witness for functoriality: search for a short word u in the
// bundle generators with Psi(u) c_orig = +- c_lift; the transversal words
// have length below the degree, so the search radius degree-1 suffices.
bool conjugating_word_exists(const FibrationData& f, const HomologyClass& from,
                             const HomologyClass& to, int radius) {
    std::vector<SymplecticMatrix> frontier = {SymplecticMatrix::identity(f.fiber.genus)};
    std::vector<SymplecticMatrix> gens;
    for (const TwistWord& w : f.bundle_words) {
        SymplecticMatrix m = word_to_matrix(w, f.fiber);
        gens.push_back(m);
        gens.push_back(m.inverse());
    }
    HomologyClass neg = to;
    for (Int& x : neg.coords)
        x = -x;
    for (int depth = 0; depth <= radius; ++depth) {
        std::vector<SymplecticMatrix> next;
        for (const SymplecticMatrix& m : frontier) {
            HomologyClass image = m.apply(from);
            if (image == to || image == neg)
                return true;
            if (depth < radius)
                for (const SymplecticMatrix& g : gens)
                    next.push_back(m * g);
        }
        frontier = std::move(next);
    }
    return false;
}

void criterion7() {
    std::mt19937_64 rng(1007);
    std::string detail;
    bool ok = true;
    try {
        std::uniform_int_distribution<int> deg_d(2, 4), genus_d(0, 1), bdry_d(1, 2), len_d(1, 2);
        for (int i = 0; i < 20 && ok; ++i) {
            FiberSurface fiber(1 + i % 2, 0);
            int h = genus_d(rng), d = bdry_d(rng);
            if (h == 0 && d == 1)
                d = 2;  // the disk has no base generators to act through
            BaseSurface base(h, d);
            std::size_t k = 2 * base.genus + (base.boundary_count >= 2 ? base.boundary_count - 1 : 0);
            std::vector<TwistWord> bundle;
            for (std::size_t j = 0; j < k; ++j)
                bundle.push_back(random_word(fiber, rng, 2));
            FibrationData f = make_fibration(fiber, base, random_word(fiber, rng, len_d(rng)), bundle);

            // connected cover: the first generator acts by a full cycle
            int degree = deg_d(rng);
            CoverSpec cover;
            cover.degree = degree;
            std::vector<int> p(degree);
            std::iota(p.begin(), p.end(), 0);
            std::rotate(p.begin(), p.begin() + 1, p.end());
            cover.generator_perms[0] = p;
            std::iota(p.begin(), p.end(), 0);
            for (std::size_t j = 1; j < k; ++j) {
                std::shuffle(p.begin(), p.end(), rng);
                cover.generator_perms[j] = p;
            }
            auto lifted = pullback_cover(f, cover);
            if (lifted.size() != 1) {
                ok = false;
                detail = "cover unexpectedly disconnected";
                break;
            }

            long chi_total = 0, np_total = 0, nm_total = 0;
            for (const FibrationData& lf : lifted) {
                chi_total += euler_characteristic(lf);
                auto [np, nm] = critical_counts(lf);
                np_total += np;
                nm_total += nm;
            }
            auto [np0, nm0] = critical_counts(f);
            if (chi_total != degree * euler_characteristic(f) || np_total != degree * np0 ||
                nm_total != degree * nm0) {
                ok = false;
                detail = "chi or critical counts do not scale by the degree";
            }

            // composed monodromy: each lifted meridian twist is a conjugate of
            // its original by a word in the bundle generators
            for (const FibrationData& lf : lifted) {
                if (!ok)
                    break;
                std::size_t copies = lf.lefschetz_word.size() / f.lefschetz_word.size();
                for (std::size_t li = 0; li < f.lefschetz_word.size() && ok; ++li) {
                    const SignedTwist& orig = f.lefschetz_word.letters[li];
                    for (std::size_t s = 0; s < copies && ok; ++s) {
                        const SignedTwist& lift = lf.lefschetz_word.letters[li * copies + s];
                        if (lift.sign != orig.sign) {
                            ok = false;
                            detail = "lifted letter changed its sign";
                        } else if (!conjugating_word_exists(f, orig.curve.homology, lift.curve.homology,
                                                            degree - 1)) {
                            ok = false;
                            detail = "lifted class is not a bundle-word transport of the original";
                        }
                    }
                }
            }
        }
        // hand-enumerated double cover: the composed monodromy is known exactly
        if (ok) {
            FiberSurface torus(1, 0);
            TwistWord lef;
            lef.letters.emplace_back(curve(torus, {1, 0}), 1);
            TwistWord core;
            core.letters.emplace_back(curve(torus, {0, 1}), 1);
            FibrationData f = make_fibration(torus, BaseSurface(0, 2), lef, {core});
            CoverSpec cover;
            cover.degree = 2;
            cover.generator_perms[0] = {1, 0};
            auto lifted = pullback_cover(f, cover);
            if (lifted.size() != 1) {
                ok = false;
                detail = "double cover not connected";
            } else {
                const FibrationData& lf = lifted[0];
                SymplecticMatrix m = word_to_matrix(core, torus);
                HomologyClass expected = normalized_class(m.apply(lef.letters[0].curve.homology));
                if (!(lf.lefschetz_word.letters[1].curve.homology == expected) ||
                    !(lf.bundle_words[0] == core.concat(core))) {
                    ok = false;
                    detail = "lifted monodromy does not equal the composed monodromy";
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "pullback functoriality and degree scaling", ok, detail);
}

void criterion8() {
    std::string detail;
    bool ok = true;
    try {
        FiberSurface g2(2, 0);
        Presentation p;
        p.fiber = g2;
        p.generators = {curve(g2, {1, 0, 0, 0}), curve(g2, {0, 1, 0, 0}), curve(g2, {1, 0, 1, 0}),
                        curve(g2, {0, 0, 0, 1}), curve(g2, {0, 0, 1, 0})};
        auto [chain_lhs, chain_rhs] = relation_library("chain", g2);
        p.relator_names = {"chain"};
        p.relators = {chain_lhs};

        for (std::size_t marked = 1; marked <= 3 && ok; ++marked) {
            std::vector<std::string> labels;
            for (std::size_t m = 0; m < marked; ++m)
                labels.push_back("m" + std::to_string(m + 1));
            HandlePlan3 plan = build_universal_dim3_plan(p, labels);
            UniversalityReport3 rep = universality_report_dim3(plan);
            bool cond4 = false;
            for (const ConditionReport& c : rep.conditions)
                if (c.name == "critical_image_connected" && c.ok())
                    cond4 = true;
            if (!cond4) {
                ok = false;
                detail = "condition (4) fails on an emitted plan";
            }
            for (std::size_t i = 0; i < plan.steps.size() && ok; ++i) {
                if (plan.steps[i].kind != HandleStep::Kind::band)
                    continue;
                HandlePlan3 mutated = plan;
                mutated.steps.erase(mutated.steps.begin() + static_cast<std::ptrdiff_t>(i));
                UniversalityReport3 bad = universality_report_dim3(mutated);
                for (const ConditionReport& c : bad.conditions)
                    if (c.name == "critical_image_connected" && c.ok()) {
                        ok = false;
                        detail = "condition (4) survives a deleted band";
                    }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "dimension-3 plan connectivity and band mutation", ok, detail);
}

std::string run_cli_capture(const std::string& cli, const std::string& subcmd, const std::string& file,
                            bool sequential) {
    std::string cmd = std::string("LEFIB_SEQUENTIAL=") + (sequential ? "1" : "0") + " \"" + cli + "\" " +
                      subcmd + " \"" + file + "\" 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion9() {
    std::string detail;
    bool ok = true;
    const std::string golden = GOLDEN_DIR;
    const std::string cli = CLI_PATH;
    for (const char* doc : {"e1", "trivial", "lantern2"}) {
        for (const char* cmd : {"validate", "invariants", "signature"}) {
            std::string file = golden + "/" + doc + ".lf";
            std::string expected = slurp(golden + "/expected_" + std::string(doc) + "_" + cmd + ".txt");
            std::string run1 = run_cli_capture(cli, cmd, file, false);
            std::string run2 = run_cli_capture(cli, cmd, file, false);
            std::string run_seq = run_cli_capture(cli, cmd, file, true);
            if (expected.empty()) {
                ok = false;
                detail = std::string("missing golden for ") + doc + "/" + cmd;
            } else if (run1 != run2) {
                ok = false;
                detail = std::string("two runs differ for ") + doc + "/" + cmd;
            } else if (run1 != run_seq) {
                ok = false;
                detail = std::string("parallel and sequential outputs differ for ") + doc + "/" + cmd;
            } else if (run1 != expected) {
                ok = false;
                detail = std::string("output differs from the golden file for ") + doc + "/" + cmd;
            }
        }
    }
    report(9, "byte-identical CLI reports", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria failed\n";
    return failures;
}
