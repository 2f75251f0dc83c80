#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symorb/sym_ideals.hpp"

namespace symorb::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

/// A polynomial in the text grammar, or the shorthand e(n,d) for e_n^d(x1..xn).
Polynomial parse_polynomial_arg(std::string_view text, std::size_t nvars, FieldSpec field);

/// `orbit:<group>:<seed>[;<seed>...]` with group S<N>, C<N> or gens:<cycles>,
/// or `list:<p>[;<p>...]` for the trivial group. nvars = 0 takes the degree
/// from the group.
OrbitIdeal parse_ideal_spec(std::string_view spec, std::size_t nvars, FieldSpec field);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symorb::cli
