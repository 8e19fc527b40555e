#pragma once

#include <string>

#include "braidmat/ladder.hpp"
#include "braidmat/matrix.hpp"
#include "braidmat/realizer.hpp"
#include "braidmat/tstructure.hpp"

namespace braidmat {

// JSON matrix form: {"n": N, "entries": [[...], ...]}.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// Mask text form: sorted pair list "1-2,1-3,2-3"; empty mask is "".
std::string mask_to_text(const UpperMask& mask);
UpperMask mask_from_text(const std::string& text, int n);

std::string trace_to_json(const MoveTrace& trace);
MoveTrace trace_from_json(const std::string& text);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// {"n":..,"vertices":[[i,j],..],"hedges":[[i,j,i,k],..],"vedges":[...]}
std::string graph_to_json(const GridGraph& g);

std::string error_to_json(const Error& e);

}  // namespace braidmat
