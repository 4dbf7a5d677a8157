#pragma once

#include <string>
#include <vector>

#include "cliffkin/cliffkin.hpp"

// Printed forms used as reference data, transcribed verbatim (products written with '*').
namespace cliffkin::golden {

inline const char* kN1 = "c2^2 + c3^2 + a2^2 + a3^2 + a0^2 + c1^2 + a1^2 + c0^2";

inline const std::vector<std::string> kQ = {
    "c0*a0 - a1*c1 - c3*a3 + c2*a2",
    "c7*c1 + c4*a0 - c5*c2 - c0*a5 + a6*a2 - a1*a4 + c6*c3 - a7*a3",
    "c5*a1 + a6*c1 - a5*a3 - c2*a4 - c7*a2 + c6*a0 + c0*a7 - c4*c3",
    "c4*c2 - c6*a1 - a5*a2 - c3*a4 - c0*a6 + c5*a0 + c7*a3 + a7*c1",
    "c6*a2 + c0*a4 - c4*c1 - c5*a3 + a7*c2 - c3*a6 + c7*a0 - a5*a1",
    "c4*a0 - a7*a3 - c7*c1 + c0*a5 - a1*a4 + a6*a2 - c6*c3 + c5*c2",
    "c7*a2 + a6*c1 - c5*a1 - a5*a3 + c6*a0 - c2*a4 + c4*c3 - c0*a7",
    "c0*a6 - c3*a4 - c4*c2 + c6*a1 - c7*a3 + a7*c1 + c5*a0 - a5*a2",
    "a7*c2 + c4*c1 - a5*a1 + c5*a3 - c6*a2 - c3*a6 - c0*a4 + c7*a0",
};

inline const std::vector<std::string> kR = {
    "c6*a2 + c0*a4 - c4*c1 - c5*a3",
    "-c7*c1 - c6*c3 + c5*c2 + c0*a5",
    "-c7*a2 + c0*a7 + c5*a1 - c4*c3",
    "c0*a6 + c6*a1 - c4*c2 - c7*a3",
    "-a1*c1 - c3*a3 + c0*a0 + c2*a2",
    "-c3*a6 + a7*c2 + c7*a0 - a5*a1",
    "c4*a0 - a7*a3 + a6*a2 - a1*a4",
    "c6*a0 - a5*a3 + a6*c1 - c2*a4",
    "a7*c1 - a5*a2 - c3*a4 + c5*a0",
};

/// R_i = (sign_a Q_a + sign_b Q_b) * scale, 1-based Q indices; R5 = Q1 uses b = 0.
struct Relation {
  int r, qa, sign_a, qb, sign_b;
  int den;
};

inline const std::vector<Relation> kRelations = {
    {1, 9, 1, 5, -1, 2}, {2, 6, 1, 2, -1, 2}, {3, 3, 1, 7, -1, 2}, {4, 8, 1, 4, -1, 2}, {5, 1, 1, 0, 0, 1},
    {6, 9, 1, 5, 1, 2},  {7, 6, 1, 2, 1, 2},  {8, 3, 1, 7, 1, 2},  {9, 8, 1, 4, 1, 2},
};

inline const char* kStudy = "c0*a0 - a1*c1 + c2*a2 - c3*a3";
inline const char* kStudyNormScalar = "a0^2 + a1^2 + a2^2 + a3^2";
inline const char* kStudyNormPseudo = "2*(c0*a0 - a1*c1 + c2*a2 - c3*a3)";

/// Planar displacement matrix (before the 1/(a0^2 + a1^2) factor) on (e12, e23, e13).
inline const std::vector<std::vector<std::string>> kPlanarMotion = {
    {"a0^2 + a1^2", "0", "0"},
    {"2*(a1*c0 + a0*c1)", "a0^2 - a1^2", "-2*a0*a1"},
    {"2*(a1*c1 - c0*a0)", "2*a0*a1", "a0^2 - a1^2"},
};

/// Spatial displacement matrix (before the 1/Delta factor) on (e123, e234, e134, e124).
inline const char* kDelta = "a0^2 + a1^2 + a2^2 + a3^2";
inline const char* kL = "2*(-a0*c1 - a3*c2 - a2*c3 - a1*c0)";
inline const char* kM = "2*(a0*c2 + a1*c3 - a2*c0 - a3*c1)";
inline const char* kN = "2*(a2*c1 + a1*c2 - a0*c3 - a3*c0)";
inline const std::vector<std::vector<std::string>> kSpatialMotion = {
    {kDelta, "0", "0", "0"},
    {kL, "a0^2 + a1^2 - a2^2 - a3^2", "2*(a2*a1 - a0*a3)", "2*(a0*a2 + a3*a1)"},
    {kM, "2*(a0*a3 + a2*a1)", "a0^2 - a1^2 + a2^2 - a3^2", "2*(a3*a2 - a0*a1)"},
    {kN, "2*(a3*a1 - a0*a2)", "2*(a3*a2 + a0*a1)", "a0^2 - a1^2 - a2^2 + a3^2"},
};

/// Left multiplication on (e0, e23, e13, e12, e1234, e14, e24, e34).
inline const std::vector<std::vector<std::string>> kGPlus = {
    {"a0", "-a1", "-a2", "-a3", "0", "0", "0", "0"},
    {"a1", "a0", "-a3", "a2", "0", "0", "0", "0"},
    {"a2", "a3", "a0", "-a1", "0", "0", "0", "0"},
    {"a3", "-a2", "a1", "a0", "0", "0", "0", "0"},
    {"c0", "c1", "-c2", "c3", "a0", "a1", "-a2", "a3"},
    {"c1", "-c0", "-c3", "-c2", "-a1", "a0", "a3", "a2"},
    {"c2", "-c3", "c0", "c1", "a2", "-a3", "a0", "a1"},
    {"c3", "c2", "c1", "-c0", "-a3", "-a2", "-a1", "a0"},
};

/// Left multiplication on (e0, e12, e13, e23).
inline const std::vector<std::vector<std::string>> kPlanarImage = {
    {"a0", "-a1", "0", "0"},
    {"a1", "a0", "0", "0"},
    {"c1", "-c0", "a0", "a1"},
    {"c0", "c1", "-a1", "a0"},
};

inline Matrix<Polynomial> matrix(const std::vector<std::vector<std::string>>& rows) {
  Matrix<Polynomial> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_polynomial(rows[i][j]);
  return m;
}

inline std::vector<QuadricForm> forms(const std::vector<std::string>& texts) {
  std::vector<QuadricForm> out;
  for (const auto& t : texts) out.emplace_back(parse_polynomial(t));
  return out;
}

}  // namespace cliffkin::golden
