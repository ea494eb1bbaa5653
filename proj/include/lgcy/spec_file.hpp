#ifndef LGCY_SPEC_FILE_HPP
#define LGCY_SPEC_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgcy/rational.hpp"

namespace lgcy {

// Hand-writable singularity description:
//   variables = [z0,z1,z2]
//   degree = 3
//   f = "z0^3+z1^3+z2^3"
//   weights = [1/3,1/3,1/3]            (optional; defaults to 1/degree each)
//   deformations = ["z0*z1*z2"]        (optional)
//   points = [[0],[1/10]]              (optional; rational vectors)
// '#' starts a comment; blank lines ignored.
struct SingularitySpec {
    std::vector<std::string> variables;
    std::int64_t degree = 0;
    std::string f_text;
    std::optional<std::vector<Rational>> weights;
    std::vector<std::string> deformations;
    std::vector<std::vector<Rational>> points;
};

SingularitySpec parse_singularity_spec(const std::string& text);
SingularitySpec load_singularity_spec(const std::string& path);

}  // namespace lgcy

#endif
