#pragma once

#include <string>
#include <vector>

#include "bchcalc/assoc.hpp"
#include "bchcalc/derive.hpp"
#include "bchcalc/freelie.hpp"

namespace bchcalc {

enum class RenderMode { Text, Latex, Json };

RenderMode render_mode_from_string(const std::string& name);

// Deterministic rendering: basis words by (degree, lex), monomials inside a
// coefficient by (degree, lex). Every mode reparses to an equal LieSeries.
std::string format(const LieSeries& s, RenderMode mode);

// One line per homogeneous block: (d_1+...+d_n)^k * (q_k).
std::string format_symmetric(const std::vector<SymmetricPart>& parts, int arity, RenderMode mode);

std::string verify_report_json(const VerifyReport& report);

}  // namespace bchcalc
