#include "bing/scene.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bing {

namespace {

constexpr const char* kMagic = "bing-scene v1";

std::vector<std::string> sorted_words(const DefiningSequence& seq) {
    std::vector<std::string> words;
    for (const auto& [w, l] : seq.loops) words.push_back(w);
    std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return words;
}

std::string word_tag(const std::string& w) { return w.empty() ? "@" : w; }
std::string untag(const std::string& t) { return t == "@" ? "" : t; }

void write_vec(std::ostream& os, const Vec3& v) {
    os << v.x.str() << " " << v.y.str() << " " << v.z.str();
}

} // namespace

void write_scene(std::ostream& os, const DefiningSequence& seq, const TwistSchedule& sched) {
    os << kMagic << "\n";
    os << "choice " << involution_name(seq.choice) << "\n";
    os << "p " << seq.schedule.p.str() << "\n";
    os << "K " << seq.K << "\n";
    os << "L2 " << seq.schedule.L2.str() << "\n";
    os << "r0 " << seq.schedule.sides[0].str() << "\n";
    os << "divisors";
    for (long n : seq.schedule.divisors) os << " " << n;
    os << "\n";
    for (const auto& w : sorted_words(seq)) {
        const CubicalLoop& l = seq.loop_of(w);
        int k = static_cast<int>(w.size());
        os << "loop " << word_tag(w) << " " << l.size() << " side " << seq.side(k).str() << "\n";
        for (std::size_t p = 0; p < l.size(); ++p) {
            Cube q = l.cube_at(p);
            write_vec(os, q.origin);
            os << "\n";
        }
        if (k <= seq.K) {
            long shift = sched.shift_for(w, seq.K, 3 * l.size());
            os << "twist " << word_tag(w) << " " << shift << "\n";
        }
    }
    for (const auto& [w, e] : seq.entries) {
        os << "split " << word_tag(w) << " ";
        Rational is = e.inner.side();
        write_vec(os, Vec3(is * Rational(e.split.t1.x), is * Rational(e.split.t1.y),
                           is * Rational(e.split.t1.z)));
        os << " ";
        write_vec(os, Vec3(is * Rational(e.split.t2.x), is * Rational(e.split.t2.y),
                           is * Rational(e.split.t2.z)));
        os << "\n";
    }
    os << "end\n";
}

std::string scene_string(const DefiningSequence& seq, const TwistSchedule& sched) {
    std::ostringstream os;
    write_scene(os, seq, sched);
    return os.str();
}

ParsedScene parse_scene(std::istream& is) {
    ParsedScene out;
    std::string line;
    if (!std::getline(is, line) || line != kMagic)
        throw std::runtime_error("scene: bad or missing header");
    DefiningSequence& seq = out.seq;
    std::map<std::string, std::array<Int3, 2>> splits;
    bool saw_end = false;
    Rational r0(1), L2(1);
    Rational p(1);
    std::string choice = "reflect";
    int K = -1;
    std::vector<long> divisors;

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "choice") {
            ls >> choice;
        } else if (key == "p") {
            std::string v;
            ls >> v;
            p = Rational::from_string(v);
        } else if (key == "K") {
            ls >> K;
        } else if (key == "r0") {
            std::string v;
            ls >> v;
            r0 = Rational::from_string(v);
        } else if (key == "L2") {
            std::string v;
            ls >> v;
            L2 = Rational::from_string(v);
        } else if (key == "divisors") {
            long n;
            while (ls >> n) divisors.push_back(n);
        } else if (key == "loop") {
            std::string tag, sidekw, sidev;
            std::size_t count = 0;
            ls >> tag >> count >> sidekw >> sidev;
            if (sidekw != "side") throw std::runtime_error("scene: malformed loop line");
            Rational side = Rational::from_string(sidev);
            std::vector<Int3> cells;
            cells.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                if (!std::getline(is, line)) throw std::runtime_error("scene: truncated loop");
                std::istringstream cs(line);
                std::string xs, ys, zs;
                cs >> xs >> ys >> zs;
                Vec3 origin(Rational::from_string(xs), Rational::from_string(ys),
                            Rational::from_string(zs));
                Cube q(origin, side);
                cells.push_back(q.cell());
            }
            auto v = CubicalLoop::validate_ordered(CubeCollection(side, std::move(cells)));
            if (!ok(v))
                throw std::runtime_error("scene: loop " + tag + " invalid (" +
                                         get_violation(v).condition + ")");
            seq.loops[untag(tag)] = std::make_shared<const CubicalLoop>(get_value(v));
        } else if (key == "twist") {
            std::string tag;
            long s = 0;
            ls >> tag >> s;
            out.sched.overrides[untag(tag)] = s;
        } else if (key == "split") {
            std::string tag;
            std::string c[6];
            ls >> tag >> c[0] >> c[1] >> c[2] >> c[3] >> c[4] >> c[5];
            std::string w = untag(tag);
            // terminal cubes live on the third-scale lattice of the word's loop
            splits[w] = {Int3{}, Int3{}};
            // defer conversion until sides are known (loops parsed above)
            const CubicalLoop& l = *seq.loops.at(w);
            Rational is = l.side() / Rational(3);
            auto cellof = [&](int base) {
                return Int3{(Rational::from_string(c[base]) / is).to_int64(),
                            (Rational::from_string(c[base + 1]) / is).to_int64(),
                            (Rational::from_string(c[base + 2]) / is).to_int64()};
            };
            splits[w] = {cellof(0), cellof(3)};
        } else if (key == "end") {
            saw_end = true;
            break;
        } else {
            throw std::runtime_error("scene: unknown directive '" + key + "'");
        }
    }
    if (!saw_end) throw std::runtime_error("scene: missing end marker");
    if (K < 0 || seq.loops.count("") == 0)
        throw std::runtime_error("scene: incomplete (no K or root loop)");
    seq.K = K;
    seq.choice = choice == "rotate" ? InvolutionChoice::Rotate : InvolutionChoice::Reflect;
    seq.schedule.p = p;
    seq.schedule.L2 = L2;
    seq.schedule.divisors = divisors;
    seq.schedule.sides = {r0};
    for (long n : divisors) seq.schedule.sides.push_back(seq.schedule.sides.back() / Rational(n));
    // rebuild the word entries from loops + recorded splits
    for (const auto& [w, anchors] : splits) {
        WordEntry e;
        e.loop = *seq.loops.at(w);
        e.inner = middle_third_ring(e.loop);
        auto sp = split_loop(e.inner, anchors[0], anchors[1]);
        if (!ok(sp)) throw std::runtime_error("scene: split of " + word_tag(w) + " invalid");
        e.split = get_value(sp);
        if (!seq.loops.count(w + "+") || !seq.loops.count(w + "-"))
            throw std::runtime_error("scene: missing children of " + word_tag(w));
        e.plus.loop = *seq.loops.at(w + "+");
        e.minus.loop = *seq.loops.at(w + "-");
        seq.entries[w] = std::move(e);
    }
    seq.finalize();
    return out;
}

ParsedScene parse_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scene: cannot open " + path);
    return parse_scene(in);
}

void write_scene_file(const std::string& path, const DefiningSequence& seq,
                      const TwistSchedule& sched) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("scene: cannot write " + tmp);
        write_scene(os, seq, sched);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("scene: rename failed for " + path);
}

} // namespace bing
