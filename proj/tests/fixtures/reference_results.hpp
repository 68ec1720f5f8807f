#pragma once

// Reference results for the 25-student case study: feedback codes
// and the four methods' numeric and linguistic outputs, as printed.

#include <array>
#include <string>
#include <vector>

namespace cwwkit::testing {

struct ReferenceRow {
  int student;
  std::array<const char*, 4> words;
  std::array<double, 3> extension;  // matched tri-tuple
  const char* extension_word;
  int symbolic;
  const char* symbolic_word;
  double beta;
  const char* two_tuple_word;
  double perceptual;
  const char* perceptual_word;
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {1, {"S", "SLA", "AM", "PM"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 2, "SSA", 4.95, "SSA"},
      {2, {"L", "SL", "AH", "PL"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 2, "SSA", 4.73, "SSA"},
      {3, {"L", "SLA", "AVH", "PM"}, {0.5, 0.75, 1}, "SSG", 3, "SSG", 3, "SSG", 6.94, "SSG"},
      {4, {"L", "SVLA", "AM", "PL"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.5, "SSG", 5.96, "SSG"},
      {5, {"S", "SVLA", "AVL", "PM"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 1.75, "SSA", 4.48, "SSA"},
      {6, {"L", "SVLA", "AVL", "PVL"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 1.75, "SSA", 4.42, "SSA"},
      {7, {"S", "SM", "AL", "PVH"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 2, "SSA", 5.05, "SSA"},
      {8, {"VLA", "SLA", "AH", "PL"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.75, "SSG", 6.56, "SSG"},
      {9, {"M", "SVLA", "AVL", "PVL"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 1.5, "SSA", 3.92, "SSA"},
      {10, {"L", "SVL", "AVH", "PVH"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.75, "SSG", 6.37, "SSG"},
      {11, {"L", "SL", "AH", "PL"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 2, "SSA", 4.73, "SSA"},
      {12, {"M", "SL", "AM", "PVH"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.25, "SSA", 5.23, "SSA"},
      {13, {"VL", "SM", "AVH", "PM"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 2, "SSA", 5.07, "SSA"},
      {14, {"L", "SVL", "AVH", "PL"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2, "SSA", 4.87, "SSA"},
      {15, {"S", "SVL", "AL", "PVH"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 1.5, "SSA", 3.92, "SSA"},
      {16, {"VLA", "SM", "AVL", "PVH"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.5, "SSG", 6.12, "SSG"},
      {17, {"VL", "SLA", "AH", "PL"}, {0.25, 0.5, 0.75}, "SSA", 2, "SSA", 1.75, "SSA", 4.47, "SSA"},
      {18, {"M", "SVLA", "AM", "PM"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.5, "SSG", 5.96, "SSG"},
      {19, {"S", "SM", "AM", "PL"}, {0, 0.25, 0.5}, "SSBA", 1, "SSBA", 1.5, "SSA", 4.00, "SSA"},
      {20, {"VL", "SLA", "AL", "PL"}, {0, 0.25, 0.5}, "SSBA", 2, "SSA", 1.25, "SSBA", 3.53, "SSBA"},
      {21, {"S", "SL", "AVH", "PH"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.25, "SSA", 5.24, "SSA"},
      {22, {"VLA", "SVL", "AVL", "PVL"}, {0, 0.25, 0.5}, "SSBA", 1, "SSBA", 1, "SSBA", 2.98, "SSBA"},
      {23, {"S", "SVLA", "AH", "PVL"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2, "SSA", 4.97, "SSA"},
      {24, {"VL", "SL", "AH", "PL"}, {0, 0.25, 0.5}, "SSBA", 2, "SSA", 1.25, "SSBA", 3.30, "SSBA"},
      {25, {"L", "SVL", "AVH", "PM"}, {0.25, 0.5, 0.75}, "SSA", 3, "SSG", 2.25, "SSA", 5.38, "SSA"},
  };
  return rows;
}

}  // namespace cwwkit::testing
