#pragma once

#include <stdexcept>
#include <string>

#include "autcl/group.hpp"

namespace autcl {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: "Z:n" cyclic, "D:n" dihedral, "Q:m" dicyclic of order 4m,
// "EA:p,k" elementary abelian, "heis:p" Heisenberg, "prod(A,B)" direct
// product (nestable). Throws ParseError with the offending position.
FiniteGroup parse_group_descriptor(const std::string& text, int max_order = default_order_cap);

}  // namespace autcl
