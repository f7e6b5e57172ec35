#pragma once

#include "bing/involution.hpp"

#include <iosfwd>
#include <string>

namespace bing {

// Line-oriented versioned text format. Cube origins are serialized as exact
// "num/den" triples so scene files diff cleanly and round-trip losslessly.
void write_scene(std::ostream& os, const DefiningSequence& seq, const TwistSchedule& sched);
std::string scene_string(const DefiningSequence& seq, const TwistSchedule& sched);

struct ParsedScene {
    DefiningSequence seq;
    TwistSchedule sched;
};

ParsedScene parse_scene(std::istream& is); // throws std::runtime_error on malformed input
ParsedScene parse_scene_file(const std::string& path);
void write_scene_file(const std::string& path, const DefiningSequence& seq,
                      const TwistSchedule& sched); // atomic: temp + rename

} // namespace bing
