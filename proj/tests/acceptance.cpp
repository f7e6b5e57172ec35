// Acceptance suite: runs every exit criterion at its stated size and prints
// one PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include "bing/linking.hpp"
#include "bing/mesh.hpp"
#include "bing/round_model.hpp"
#include "bing/scene.hpp"
#include "bing/sobolev.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>

using namespace bing;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

} // namespace

int main() {
    const Rational p1 = rat(1);
    auto t_all = std::chrono::steady_clock::now();

    // ---- criterion 3 (rotate half): generated rotate tree at K = 3 ----
    {
        auto sequence = defining_sequence(InvolutionChoice::Rotate, p1, 3, {});
        auto checks = validate_sequence(sequence);
        bool pass = all_pass(checks);
        std::string bad;
        for (const auto& c : checks)
            if (!c.pass) bad += c.name + " ";
        report(3, pass, "configuration validators, rotate tree to K = 3 (exact R-equivariance)",
               pass ? "all " + std::to_string(checks.size()) + " checks exact" : bad);
    }

    // ---- the reflect tree at K = 3 drives most criteria ----
    auto t_build = std::chrono::steady_clock::now();
    DefiningSequence seq = defining_sequence(InvolutionChoice::Reflect, p1, 3, {});
    {
        auto checks = validate_sequence(seq);
        bool pass = all_pass(checks);
        std::string bad;
        for (const auto& c : checks)
            if (!c.pass) bad += c.name + " ";
        report(3, pass, "configuration validators, reflect tree to K = 3 (exact R-symmetry)",
               pass ? "all " + std::to_string(checks.size()) + " checks exact, " +
                          std::to_string(seq.total_cubes()) + " cubes"
                    : bad);
    }

    TwistSchedule sched; // default: quarter shift at the deepest stage
    ChainSet chains(seq, sched);
    const PLMapChain& f3 = chains.f(3);
    std::cout << "build+chains: " << fmt(seconds_since(t_build)) << "s" << std::endl;

    // ---- criterion 1: exact involution ----
    {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t per = 2600, mism = 0, total = 0;
        for (int k = 0; k <= 3; ++k) {
            auto rep = involution_check(f3, seq.level_union(k), per, 1000 + k);
            mism += rep.mismatches;
            total += rep.samples;
        }
        double dt = seconds_since(t0);
        report(1, mism == 0 && total >= 10000 && dt <= 300,
               "f_3(f_3(x)) = x exactly at >= 10^4 stratified points",
               std::to_string(total) + " samples, " + std::to_string(mism) + " mismatches, " +
                   fmt(dt) + "s");
    }

    // ---- criterion 2: boundary and support exactness ----
    {
        Mat3 R = involution_matrix(seq.choice);
        std::size_t checked = 0, bad = 0;
        for (long i = 0; i < 300; ++i) {
            Vec3 x(rat(4 + (i % 9)) * seq.side(0), rat(i % 7) * seq.side(0),
                   rat(i % 5) * seq.side(0));
            if (!(f3.evaluate(x) == R * x)) ++bad;
            ++checked;
        }
        auto stage = build_stage(seq, 3, sched);
        for (const auto& w : seq.words_at(3)) {
            const CubicalLoop& l = seq.loop_of(w);
            std::size_t step = std::max<std::size_t>(1, l.size() / 25);
            for (std::size_t q = 0; q < l.size() && checked < 2100; q += step) {
                for (const auto& v : l.cube_at(q).vertices()) {
                    if (!(stage->evaluate(v) == v)) ++bad; // cube vertices lie on the boundary
                    ++checked;
                }
            }
        }
        report(2, bad == 0 && checked >= 1000,
               "f_3 = R outside the root torus; twists fix torus boundaries pointwise",
               std::to_string(checked) + " lattice points, " + std::to_string(bad) + " moved");
    }

    // ---- criterion 4: straightener contract ----
    {
        bool pass = true;
        std::string detail;
        CornerFrame fr;
        fr.corner_origin = Vec3::of(0, 0, 0);
        fr.side = rat(1);
        fr.to_prev = {1, 0, 0};
        fr.to_next = {0, 1, 0};
        auto phi = corner_straightener(fr, 1);
        for (long i = 0; i <= 8 && pass; ++i) {
            Rational t = rat(i, 8);
            if (!(phi->evaluate(Vec3(rat(2), t, rat(1, 2))) == Vec3(rat(2), t, rat(1, 2))))
                pass = false;
            Vec3 rot = phi->evaluate(Vec3(t, rat(2), rat(1, 2)));
            if (!(rot == Vec3(rat(-1), t, rat(1, 2)))) pass = false;
        }
        auto outer = seq.loop_of("");
        auto u = tube_unroll(outer, 1);
        for (const auto& b : i_blocks(outer))
            for (auto pos : b.reduced_positions) {
                auto vs = outer.cube_at(pos).vertices();
                std::vector<Vec3> im;
                for (const auto& v : vs) im.push_back(u.forward->evaluate(v));
                for (int i = 0; i < 8; ++i)
                    for (int j = i + 1; j < 8; ++j) {
                        Vec3 d0 = vs[i] - vs[j], d1 = im[i] - im[j];
                        Rational per = u.tube.period;
                        d1.x = d1.x - per * ((d1.x / per) + rat(1, 2)).floor();
                        if (!(dot(d0, d0) == dot(d1, d1))) pass = false;
                    }
            }
        auto ca = measure_constants(seq, f3, 1000000, 101);
        auto cb = measure_constants(seq, f3, 1000000, 202);
        auto two_sig = [](double v) { return std::round(v * 100.0) / 100.0; };
        if (!(std::isfinite(ca.L_inner) && ca.L_inner >= 1)) pass = false;
        if (two_sig(ca.L_inner_sampled) != two_sig(cb.L_inner_sampled)) pass = false;
        detail = "L_inner = " + fmt(ca.L_inner) + ", sampled " + fmt(ca.L_inner_sampled) + " / " +
                 fmt(cb.L_inner_sampled) + " at 10^6 samples";
        report(4, pass, "straightener contract and stable measured constant", detail);
    }

    // ---- criterion 5: cubical image tori ----
    {
        bool pass = true;
        std::string detail;
        try {
            auto tori = image_tori(seq, chains, 3);
            std::size_t n = 0;
            for (const auto& t : tori) {
                if (t.corner_count > 2 * t.source_corner_count) pass = false;
                n += t.torus.size();
            }
            if (!check_conjugacy(seq, chains, 3)) pass = false;
            detail = std::to_string(tori.size()) + " tori, " + std::to_string(n) +
                     " cubes lattice-exact, conjugacy exact";
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        report(5, pass, "image tori lattice-exact, valid, corner growth <= 2x, conjugacy", detail);
    }

    // ---- criterion 6: exact measure bounds ----
    {
        bool pass = true;
        for (int k = 0; k <= 3; ++k) {
            Rational rk = seq.side(k);
            if (!(seq.level_volume(k) <= Rational(2).pow_int(k + 1) * rk * rk)) pass = false;
            if (!(seq.corner_volume(k) <= Rational(4).pow_int(k + 1) * rk * rk * rk)) pass = false;
        }
        report(6, pass, "|X_k| <= 2^{k+1} r_k^2 and corner regions <= 4^{k+1} r_k^3, exact",
               "zero tolerance, k <= 3");
    }

    // ---- criterion 7: pointwise Lipschitz bound ----
    MeasuredConstants consts = measure_constants(seq, f3, 50000, 7001);
    {
        auto rep = check_lip_bound(seq, f3, consts, 100000, 8002);
        report(7, rep.violations == 0 && rep.samples >= 100000,
               "|Df_3| <= L1 L_inner^{2 eta} / r_ell at 10^5 a.e. points",
               std::to_string(rep.samples) + " samples, " + std::to_string(rep.violations) +
                   " violations, max ratio " + fmt(rep.max_ratio) + ", " +
                   std::to_string(rep.skeleton_rejects) + " skeleton rejects");
    }

    // ---- criterion 8: energy decay ----
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rows = lp_energy(seq, f3, p1, consts, 1000000, 9003);
        bool pass = true;
        std::ostringstream detail;
        double total = 0;
        for (const auto& r : rows) total += r.energy_y + r.energy_corner;
        for (std::size_t i = 1; i + 1 < rows.size(); ++i)
            if (!(rows[i].energy_y <= 0.8 * rows[i - 1].energy_y)) pass = false;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (!(rows[i].energy_corner <= rows[i].cap_corner * 1.2)) pass = false;
        if (!std::isfinite(total)) pass = false;
        double dt = seconds_since(t0);
        if (dt > 900) pass = false;
        detail << "Y energies";
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) detail << " " << fmt(rows[i].energy_y);
        detail << ", total " << fmt(total) << ", " << fmt(dt) << "s";
        report(8, pass, "per-level Y energies decay (ratio <= 0.8), corners <= 2^-k * 1.2",
               detail.str());
    }

    // ---- criterion 12: convergence diagnostics ----
    {
        auto rows = convergence_diagnostics(seq, chains, 2000, 1203);
        bool pass = rows.size() == 3;
        std::ostringstream detail;
        for (const auto& r : rows) {
            if (r.sup_diff > r.max_torus_diam + 1e-12) pass = false;
            detail << "k=" << r.k << ": " << fmt(r.sup_diff) << " <= " << fmt(r.max_torus_diam)
                   << "  ";
        }
        report(12, pass, "sup |psi_{k+1} - psi_k| bounded by level-(k+1) torus diameters",
               detail.str());
    }

    // ---- criterion 9: adjoint identity for f_2 ----
    {
        DefiningSequence s2 = defining_sequence(InvolutionChoice::Reflect, p1, 2, {});
        TwistSchedule sch2;
        PLMapChain f2 = f_chain(s2, 2, sch2);
        bool pass = true;
        std::ostringstream detail;
        for (const Rational& p : {rat(1), rat(3, 2)}) {
            auto rep = adjoint_identity(s2, f2, p, 400000, 1404);
            double tol = 2 * (rep.lhs_halfwidth + rep.rhs_halfwidth);
            if (!(std::abs(rep.lhs - rep.rhs) <= tol + 1e-12)) pass = false;
            detail << "p=" << p.str() << ": " << fmt(rep.lhs) << " vs " << fmt(rep.rhs) << " (tol "
                   << fmt(tol) << ")  ";
        }
        report(9, pass, "int |Df|^p dx = int |adj Df|^p / J^{p-1} dy within 2x MC half-width",
               detail.str());
    }

    // ---- criterion 10: round model ----
    {
        bool pass = true;
        RoundTorusModel m{0.5, 1.0, 1.0, 1.3};
        for (double th : {0.0, 0.7, 2.1, 4.4}) {
            R4 pb{std::cos(th), std::sin(th), std::cos(th + 1), std::sin(th + 1)};
            R4 qb = round_twist_apply(m, pb);
            for (int i = 0; i < 4; ++i)
                if (std::abs(qb[i] - pb[i]) > 1e-12) pass = false;
            R4 pi{0.3 * std::cos(th), 0.3 * std::sin(th), std::cos(th), std::sin(th)};
            R4 qi = round_twist_apply(m, pi);
            double want2 = std::cos(th + m.alpha), want3 = std::sin(th + m.alpha);
            if (std::abs(qi[2] - want2) > 1e-12 || std::abs(qi[3] - want3) > 1e-12) pass = false;
        }
        // monotone in alpha and in the band thinness r/R: the shear magnitude
        // is ell*alpha/(R-r), so the constant is nonincreasing in R/r
        double prev = 0;
        for (double a : {0.5, 1.0, 1.6, 2.3, 3.0}) {
            double c = round_twist_bilipschitz(RoundTorusModel{0.5, 1.0, 1.0, a}, 20000, 42);
            if (c < prev - 1e-9) pass = false;
            prev = c;
        }
        prev = 0;
        for (double inner : {0.3, 0.45, 0.6, 0.75, 0.9}) {
            double c = round_twist_bilipschitz(RoundTorusModel{inner, 1.0, 1.0, 2.0}, 20000, 42);
            if (c < prev - 1e-9) pass = false;
            prev = c;
        }
        report(10, pass,
               "round model: boundary identity, inner rotation, monotone constant (alpha, r/R)",
               "residuals <= 1e-12; 5x5 grid monotone in alpha and r/R");
    }

    // ---- criterion 11: determinism, round trip, mesh topology ----
    {
        bool pass = true;
        std::string detail;
        TwistSchedule sch2;
        auto a = defining_sequence(InvolutionChoice::Reflect, p1, 2, {});
        auto b = defining_sequence(InvolutionChoice::Reflect, p1, 2, {});
        std::string sa = scene_string(a, sch2), sb = scene_string(b, sch2);
        if (sa != sb) pass = false;
        std::istringstream in(sa);
        auto parsed = parse_scene(in);
        if (scene_string(parsed.seq, parsed.sched) != sa) pass = false;
        for (int k = 0; k <= 2; ++k) {
            auto st = analyze_mesh(boundary_mesh(a.level_union(k)));
            if (!st.closed_manifold || st.euler != 0 || st.components != (1 << k)) pass = false;
        }
        auto st = analyze_mesh(boundary_mesh(a.loop_of("+").collection()));
        if (!st.closed_manifold || st.euler != 0 || st.components != 1) pass = false;
        detail = std::to_string(sa.size()) + " byte scene; tori closed, Euler 0";
        report(11, pass, "byte-identical regeneration, parse/serialize identity, torus meshes",
               detail);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria PASS"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << " (" << fmt(seconds_since(t_all)) << "s total)" << std::endl;
    return failures == 0 ? 0 : 1;
}
