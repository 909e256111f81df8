#pragma once

#include <span>
#include <string>

#include "tanglekit/cyclotomic.hpp"
#include "tanglekit/laurent_poly.hpp"
#include "tanglekit/link_diagram.hpp"

namespace tanglekit {

inline constexpr int kBracketCrossingCap = 16;

/// Kauffman bracket in A, normalized so a single circle has bracket 1.
/// The A-smoothing joins PD positions (0,1) and (2,3).
/// Throws TooLarge above kBracketCrossingCap crossings and Error on the empty
/// diagram.
LaurentPoly kauffman_bracket(const LinkDiagram& d);

/// Jones polynomial in s = t^{1/2}: (-A^3)^{-w} <D> with A = s^{-1/2}.
/// `reverse` flips crossing components as in orient().
LaurentPoly jones(const LinkDiagram& d, std::span<const bool> reverse = {});

/// Formats a polynomial in s = t^{1/2} using powers of t, e.g. "t^-2 - t^(-1/2)".
std::string format_in_t(const LaurentPoly& p_in_s);

enum class FiveMoveVerdict { NotFiveMoveTrivializable, Inconclusive };

std::string to_string(FiveMoveVerdict v);

struct Jones5Result {
  LaurentPoly polynomial;
  CyclotomicValue value;
  FiveMoveVerdict verdict = FiveMoveVerdict::Inconclusive;
};

/// Jones polynomial, its value at t = e^{i pi/5}, and the verdict
/// (not trivializable iff the value is exactly zero).
Jones5Result jones_at_fifth_root(const LinkDiagram& d);

FiveMoveVerdict five_move_obstruction(const LinkDiagram& d);

}  // namespace tanglekit
