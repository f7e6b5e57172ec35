// Command-line surface: generate and validate defining sequences, evaluate
// the stage maps and involution approximants, run the Sobolev energy tables,
// report measured constants, and export cube unions as OBJ meshes.

#include <CLI11.hpp>

#include "bing/mesh.hpp"
#include "bing/scene.hpp"
#include "bing/sobolev.hpp"

#include <fstream>
#include <iostream>

using namespace bing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct CommonConfig {
    std::string choice = "reflect";
    std::string p = "1";
    int K = 2;
    std::string r0 = "1/12";
    long budget = 10000000;
    std::uint64_t seed = 1;
    std::string config_file;
};

void load_config_file(CommonConfig& cfg) {
    if (cfg.config_file.empty()) return;
    std::ifstream in(cfg.config_file);
    if (!in) throw std::runtime_error("cannot open " + cfg.config_file);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "choice") cfg.choice = val;
        else if (key == "p") cfg.p = val;
        else if (key == "K") cfg.K = std::stoi(val);
        else if (key == "r0") cfg.r0 = val;
        else if (key == "budget") cfg.budget = std::stol(val);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(val));
    }
}

InvolutionChoice parse_choice(const std::string& s) {
    if (s == "reflect") return InvolutionChoice::Reflect;
    if (s == "rotate") return InvolutionChoice::Rotate;
    throw std::runtime_error("choice must be reflect or rotate");
}

Rational parse_rat(const std::string& s) {
    return s.find('.') != std::string::npos ? Rational::from_decimal(s)
                                            : Rational::from_string(s);
}

DefiningSequence build_from(const CommonConfig& cfg) {
    BuildOptions opt;
    opt.r0 = parse_rat(cfg.r0);
    opt.cube_budget = cfg.budget;
    Rational p = parse_rat(cfg.p);
    {
        auto probe = make_schedule(p, opt.L2, std::max(cfg.K, 1),
                                   DivisorPolicy::ClaspCompatible, opt.r0);
        if (schedule_explodes(probe))
            std::cerr << "warning: p close to 2 makes the side-length divisors explode ("
                      << probe.divisors.back() << " at the deepest level)\n";
    }
    return defining_sequence(parse_choice(cfg.choice), p, cfg.K, opt);
}

int report_validation(const std::vector<CheckItem>& checks) {
    bool okall = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        okall = okall && c.pass;
    }
    return okall ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubical Bing-double construction and Sobolev energy toolkit"};
    app.require_subcommand(1);

    CommonConfig cfg;

    std::string scene_path = "scene.txt", out_path, points_path, map_spec = "f";
    int level = -1;
    std::string word_sel;
    std::string format = "obj";
    std::size_t samples = 100000;
    std::string p_override;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--config", cfg.config_file, "key = value configuration file");
        c->add_option("--choice", cfg.choice, "involution: reflect | rotate");
        c->add_option("-p,--exponent", cfg.p, "Sobolev exponent in [1,2)");
        c->add_option("-K,--depth", cfg.K, "tree depth");
        c->add_option("--r0", cfg.r0, "root side length (rational)");
        c->add_option("--budget", cfg.budget, "total cube budget");
        c->add_option("--seed", cfg.seed, "sampling seed");
    };

    auto* gen = app.add_subcommand("generate", "build the defining sequence and write a scene");
    add_common(gen);
    gen->add_option("-o,--output", scene_path, "scene file path");

    auto* val = app.add_subcommand("validate", "re-run every validator over a scene");
    val->add_option("scene", scene_path, "scene file")->required();

    auto* ev = app.add_subcommand("eval", "map points through psi, f, or a stage");
    ev->add_option("scene", scene_path, "scene file")->required();
    ev->add_option("--map", map_spec, "psi | f | theta:<k>");
    ev->add_option("--level", level, "chain level k (default: scene depth)");
    ev->add_option("--points", points_path, "file of 'x y z' rational triples")->required();
    ev->add_option("-o,--output", out_path, "images file (default: stdout)");

    auto* sob = app.add_subcommand("sobolev", "per-level energy table with exact measures");
    sob->add_option("scene", scene_path, "scene file")->required();
    sob->add_option("-p,--exponent", p_override, "exponent override");
    sob->add_option("--samples", samples, "samples per level");
    sob->add_option("--seed", cfg.seed, "sampling seed");

    auto* con = app.add_subcommand("constants", "measure the construction constants");
    add_common(con);
    con->add_option("--samples", samples, "sample count");

    auto* exp = app.add_subcommand("export", "boundary mesh of a level or word");
    exp->add_option("scene", scene_path, "scene file")->required();
    exp->add_option("--level", level, "level union to export");
    exp->add_option("--word", word_sel, "single word to export ('@' for the root)");
    exp->add_option("--format", format, "obj");
    exp->add_option("-o,--output", out_path, "mesh file")->required();

    try {
        app.parse(argc, argv);
        load_config_file(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (gen->parsed()) {
            DefiningSequence seq;
            try {
                seq = build_from(cfg);
            } catch (const std::runtime_error& e) {
                if (std::string(e.what()).find("budget") != std::string::npos) {
                    std::cerr << "refused: " << e.what() << "\n";
                    return kExitBudget;
                }
                throw;
            }
            auto checks = validate_sequence(seq);
            TwistSchedule sched;
            write_scene_file(scene_path, seq, sched);
            std::cout << "wrote " << scene_path << " (" << seq.total_cubes() << " cubes, depth "
                      << seq.K << ")\n";
            return report_validation(checks);
        }
        if (val->parsed()) {
            auto parsed = parse_scene_file(scene_path);
            return report_validation(validate_sequence(parsed.seq));
        }
        if (ev->parsed()) {
            auto parsed = parse_scene_file(scene_path);
            int k = level < 0 ? parsed.seq.K : level;
            PLMapChain chain;
            if (map_spec == "psi") chain = psi_chain(parsed.seq, k, parsed.sched);
            else if (map_spec == "f") chain = f_chain(parsed.seq, k, parsed.sched);
            else if (map_spec.rfind("theta:", 0) == 0)
                chain = PLMapChain::single(
                    build_stage(parsed.seq, std::stoi(map_spec.substr(6)), parsed.sched));
            else {
                std::cerr << "config error: unknown map '" << map_spec << "'\n";
                return kExitConfig;
            }
            std::ifstream pin(points_path);
            if (!pin) {
                std::cerr << "config error: cannot open " << points_path << "\n";
                return kExitConfig;
            }
            std::ostream* os = &std::cout;
            std::ofstream fout;
            if (!out_path.empty()) {
                fout.open(out_path);
                os = &fout;
            }
            std::string xs, ys, zs;
            while (pin >> xs >> ys >> zs) {
                Vec3 p(parse_rat(xs), parse_rat(ys), parse_rat(zs));
                Vec3 img = chain.evaluate(p);
                *os << img.x.str() << " " << img.y.str() << " " << img.z.str() << "\n";
            }
            return kExitOk;
        }
        if (sob->parsed()) {
            auto parsed = parse_scene_file(scene_path);
            Rational p = p_override.empty() ? parsed.seq.schedule.p : parse_rat(p_override);
            auto f = f_chain(parsed.seq, parsed.seq.K, parsed.sched);
            auto consts = measure_constants(parsed.seq, f, 20000, cfg.seed);
            auto rows = lp_energy(parsed.seq, f, p, consts, samples, cfg.seed);
            std::cout << "constants: L_inner " << consts.L_inner << " L_diamond "
                      << consts.L_diamond << " L1 " << consts.L1 << "\n";
            std::cout << "k  |X_k|(exact)  Y-energy  (+-)  cap  corner-energy  (+-)  cap\n";
            double total = 0;
            for (const auto& r : rows) {
                std::cout << r.k << "  " << r.measure_exact.str() << "  " << r.energy_y << "  ("
                          << r.energy_y_halfwidth << ")  " << r.cap_y << "  " << r.energy_corner
                          << "  (" << r.energy_corner_halfwidth << ")  " << r.cap_corner << "\n";
                total += r.energy_y + r.energy_corner;
            }
            std::cout << "total " << total << "\n";
            return kExitOk;
        }
        if (con->parsed()) {
            auto seq = build_from(cfg);
            TwistSchedule sched;
            auto f = f_chain(seq, seq.K, sched);
            auto c = measure_constants(seq, f, samples, cfg.seed);
            double replay = lip_ratio_at(seq, f, c, c.L1_witness);
            std::cout << "L_inner " << c.L_inner << " (sampled " << c.L_inner_sampled << ")\n"
                      << "L_diamond " << c.L_diamond << "\n"
                      << "L1 " << c.L1 << " (calibrated sup " << c.L1_raw << ", witness ("
                      << c.L1_witness.x.str() << ", " << c.L1_witness.y.str() << ", "
                      << c.L1_witness.z.str() << ") replays " << replay << ")\n"
                      << "L2 " << c.L2 << "\n"
                      << "samples " << c.samples << " seed " << c.seed << "\n";
            return kExitOk;
        }
        if (exp->parsed()) {
            auto parsed = parse_scene_file(scene_path);
            if (format != "obj") {
                std::cerr << "config error: unknown format '" << format << "'\n";
                return kExitConfig;
            }
            TriMesh m;
            if (!word_sel.empty()) {
                std::string w = word_sel == "@" ? "" : word_sel;
                m = boundary_mesh(parsed.seq.loop_of(w).collection());
            } else {
                int k = level < 0 ? parsed.seq.K : level;
                m = boundary_mesh(parsed.seq.level_union(k));
            }
            auto st = analyze_mesh(m);
            std::string tmp = out_path + ".tmp";
            {
                std::ofstream os(tmp);
                write_obj(os, m);
            }
            if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
                throw std::runtime_error("cannot write " + out_path);
            std::cout << "wrote " << out_path << ": " << m.vertices.size() << " vertices, "
                      << m.faces.size() << " triangles, components " << st.components
                      << ", euler " << st.euler << (st.closed_manifold ? ", closed" : ", OPEN")
                      << "\n";
            return st.closed_manifold ? kExitOk : kExitValidation;
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
