#pragma once

#include "bing/bing_template.hpp"

#include <map>
#include <memory>
#include <string>

namespace bing {

// One node of the word tree: the loop, its concentric inner ring, the
// splitting of the ring and the two children placed in the splitting arcs.
struct WordEntry {
    CubicalLoop loop;
    CubicalLoop inner;
    Splitting split;
    Racetrack plus, minus;
};

struct BuildOptions {
    Rational r0 = rat(1, 12);
    Rational L2 = rat(23, 10); // rational upper bound for the measured constant
    long cube_budget = 10000000;
};

// Word-indexed tree of loops to depth K with per-level unions materialized.
// Words are strings over {+,-}; the empty word is the root.
class DefiningSequence {
public:
    InvolutionChoice choice;
    SideSchedule schedule;
    int K = 0;
    BuildOptions options;
    std::map<std::string, WordEntry> entries; // |w| <= K-1
    std::map<std::string, std::shared_ptr<const CubicalLoop>> loops; // |w| <= K

    const CubicalLoop& loop_of(const std::string& w) const { return *loops.at(w); }
    std::vector<std::string> words_at(int k) const;
    const Rational& side(int k) const { return schedule.side(k); }

    // X_k as one collection (pairwise disjoint loops, merged cells).
    const CubeCollection& level_union(int k) const { return *level_unions_.at(k); }
    bool level_contains(int k, const Vec3& x) const;
    // Largest k <= K with x in X_k.
    int level_of(const Vec3& x) const;

    // Corner-region cells of the level-k image tori (cells at side r_k).
    const CubeCollection& corner_region(int k) const { return *corner_regions_.at(k); }

    Rational level_volume(int k) const { return level_union(k).volume(); }
    Rational corner_volume(int k) const { return corner_region(k).volume(); }
    std::size_t total_cubes() const;

    void finalize(); // builds level unions and corner regions

private:
    std::vector<std::shared_ptr<CubeCollection>> level_unions_;
    std::vector<std::shared_ptr<CubeCollection>> corner_regions_;
};

DefiningSequence defining_sequence(InvolutionChoice choice, const Rational& p, int K,
                                   const BuildOptions& opt = {});

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Every validator over the generated tree; all checks exact.
std::vector<CheckItem> validate_sequence(const DefiningSequence& seq);
bool all_pass(const std::vector<CheckItem>& items);

std::string flip_word(const std::string& w);

} // namespace bing
