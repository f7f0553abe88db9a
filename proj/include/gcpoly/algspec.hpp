#pragma once

#include <string>
#include <vector>

#include "gcpoly/matalg.hpp"

namespace gcpoly {

// Textual description of a graded matrix algebra, read from "key = value"
// lines ('#' starts a comment):
//
//   kind      = mnf | mne | mab
//   group     = Z2 | Z2xZ4 | trivial | table:<path>     (mnf, mne)
//   tuple     = e, g, g2                                 (mnf, mne)
//   a         = 1                                        (mab)
//   b         = 1                                        (mab)
//   conductor = 1        # session field Q(zeta_m)
//   budget    = 6        # Grassmann generators (mne, mab)
struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::MnF;
  GroupPtr group;          // resolved grading group (mnf, mne)
  std::vector<int> tuple;  // resolved element indices (mnf, mne)
  int a = 0, b = 0;        // block sizes (mab)
  int conductor = 1;
  int budget = 6;

  GradedMatrixAlgebra build() const;
};

// "Z6", "Z2xZ2xZ3", "trivial", or "table:<path>" (a file whose first data
// line lists element names and whose remaining lines give the
// multiplication table rows, entries by name or index).
GroupPtr parse_group_spec(const std::string& spec);

AlgebraSpec parse_algebra_text(const std::string& text);
AlgebraSpec parse_algebra_file(const std::string& path);

}  // namespace gcpoly
