#pragma once

// Reference data for the 53 shipped networks: input maps, the symbolic
// Jacobian entry layout, and the expected classification results the test
// suite regresses against. Maps are 1-indexed; rows are ;-separated.

namespace ccn::detail {

struct RawEntry {
  const char* id;
  const char* sigma;        // "a,b,c|d,e,f": one |-separated row per input type
  const char* jacobian;     // entry grid, rows ;-separated, entries ,-separated
  int expected_2d;          // number of two-dimensional synchrony subspaces
  const char* structure;    // expected annotated-lattice structure tag
  const char* spectrum;     // expected generic spectrum class
  const char* top_branch;   // "supports" | "open" | "none"
  const char* discriminant; // expected canonical discriminant string, or null
};

inline constexpr RawEntry kCatalog[] = {
  {"A", "3,1,2", "f0,0,f1; f1,f0,0; 0,f1,f0", 0, "C3L0", "distinct-complex", "none", nullptr},
  {"C", "1,1,1", "f0+f1,0,0; f1,f0,0; f1,0,f0", 3, "C2L3s", "semisimple-double", "none", nullptr},
  {"D", "1,1,2", "f0+f1,0,0; f1,f0,0; 0,f1,f0", 1, "C2L1d", "defective", "supports", nullptr},
  {"F", "2,1,1", "f0,f1,0; f1,f0,0; f1,0,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"E6_B1", "1,1,3|1,3,2", "f0+f1+f2,0,0; f1,f0,f2; 0,f2,f0+f1", 0, "C3L0", "distinct-real-always", "supports", "f1^2 + 4f2^2"},
  {"B1_F2", "1,3,2|2,1,2", "f0+f1,f2,0; f2,f0,f1; 0,f1+f2,f0", 0, "C3L0", "distinct-real-always", "supports", nullptr},
  {"C1_A2", "1,1,1|2,3,1", "f0+f1,f2,0; f1,f0,f2; f1+f2,0,f0", 0, "C3L0", "distinct-complex", "none", "-3f2^2"},
  {"A2_A1", "2,3,1|3,1,2", "f0,f1,f2; f2,f0,f1; f1,f2,f0", 0, "C3L0", "distinct-complex", "none", nullptr},
  {"B1_B3", "1,3,2|2,1,3", "f0+f1,f2,0; f2,f0,f1; 0,f1,f0+f2", 0, "C3L0", "distinct-real-always", "supports", nullptr},
  {"D1_F3", "1,1,2|2,3,2", "f0+f1,f2,0; f1,f0,f2; 0,f1+f2,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_D6", "1,1,2|2,3,3", "f0+f1,f2,0; f1,f0,f2; 0,f1,f0+f2", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_F6", "1,1,2|3,1,1", "f0+f1,0,f2; f1+f2,f0,0; f2,f1,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_A1", "1,1,2|3,1,2", "f0+f1,0,f2; f1+f2,f0,0; 0,f1+f2,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_D2", "1,1,2|1,3,1", "f0+f1+f2,0,0; f1,f0,f2; f2,f1,f0", 0, "C3L0", "distinct-real-open", "open", "4f1f2 - 8f1^2"},
  {"D1_D5", "1,1,2|3,1,3", "f0+f1,0,f2; f1+f2,f0,0; 0,f1,f0+f2", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_B1", "1,1,2|1,3,2", "f0+f1+f2,0,0; f1,f0,f2; 0,f1+f2,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_B2", "1,1,2|3,2,1", "f0+f1,0,f2; f1,f0+f2,0; f2,f1,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_E4", "1,1,2|1,3,3", "f0+f1+f2,0,0; f1,f0,f2; 0,f1,f0+f2", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"E6_A2", "1,1,3|2,3,1", "f0+f1,f2,0; f1,f0,f2; f2,0,f0+f1", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"B1_A2", "1,3,2|2,3,1", "f0+f1,f2,0; 0,f0,f1+f2; f2,f1,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"F1_A2", "2,1,1|2,3,1", "f0,f1+f2,0; f1,f0,f2; f1+f2,0,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_A2", "1,1,2|2,3,1", "f0+f1,f2,0; f1,f0,f2; f2,f1,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"F1_A1", "2,1,1|3,1,2", "f0,f1,f2; f1+f2,f0,0; f1,f2,f0", 0, "C3L0", "distinct-real-open", "open", nullptr},
  {"D1_E1", "1,1,2|1,2,1", "f0+f1+f2,0,0; f1,f0+f2,0; f2,f1,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_F1", "1,1,2|2,1,1", "f0+f1,f2,0; f1+f2,f0,0; f2,f1,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_F2", "1,1,2|2,1,2", "f0+f1,f2,0; f1+f2,f0,0; 0,f1+f2,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_B3", "1,1,2|2,1,3", "f0+f1,f2,0; f1+f2,f0,0; 0,f1,f0+f2", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"C1_B1", "1,1,1|1,3,2", "f0+f1+f2,0,0; f1,f0,f2; f1,f2,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_F4", "1,1,2|3,3,2", "f0+f1,0,f2; f1,f0,f2; 0,f1+f2,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"C1_B3", "1,1,1|2,1,3", "f0+f1,f2,0; f1+f2,f0,0; f1,0,f0+f2", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"E6_F3", "1,1,3|2,3,2", "f0+f1,f2,0; f1,f0,f2; 0,f2,f0+f1", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_E6", "1,1,2|1,1,3", "f0+f1+f2,0,0; f1+f2,f0,0; 0,f1,f0+f2", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"E6_F6", "1,1,3|3,1,1", "f0+f1,0,f2; f1+f2,f0,0; f2,0,f0+f1", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"E6_F4", "1,1,3|3,3,2", "f0+f1,0,f2; f1,f0,f2; 0,f2,f0+f1", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"B1_F1", "1,3,2|2,1,1", "f0+f1,f2,0; f2,f0,f1; f2,f1,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"F1_F2", "2,1,1|2,1,2", "f0,f1+f2,0; f1+f2,f0,0; f1,f2,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"F1_F3", "2,1,1|2,3,2", "f0,f1+f2,0; f1,f0,f2; f1,f2,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"F1_F6", "2,1,1|3,1,1", "f0,f1,f2; f1+f2,f0,0; f1+f2,0,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"D1_F5", "1,1,2|3,3,1", "f0+f1,0,f2; f1,f0,f2; f2,f1,f0", 1, "C3L1", "distinct-real-always", "supports", nullptr},
  {"E6_E4", "1,1,3|1,3,3", "f0+f1+f2,0,0; f1,f0,f2; 0,0,f0+f1+f2", 1, "C2L1v", "valency-double", "supports", nullptr},
  {"C1_D1", "1,1,1|1,1,2", "f0+f1+f2,0,0; f1+f2,f0,0; f1,f2,f0", 1, "C2L1d", "defective", "supports", nullptr},
  {"C1_D4", "1,1,1|2,2,1", "f0+f1,f2,0; f1,f0+f2,0; f1+f2,0,f0", 1, "C2L1d", "defective", "supports", nullptr},
  {"C1_D6", "1,1,1|2,3,3", "f0+f1,f2,0; f1,f0,f2; f1,0,f0+f2", 1, "C2L1d", "defective", "supports", nullptr},
  {"D1_D4", "1,1,2|2,2,1", "f0+f1,f2,0; f1,f0+f2,0; f2,f1,f0", 1, "C2L1d", "defective", "supports", nullptr},
  {"C1_E6", "1,1,1|1,1,3", "f0+f1+f2,0,0; f1+f2,f0,0; f1,0,f0+f2", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"C1_E3", "1,1,1|1,2,2", "f0+f1+f2,0,0; f1,f0+f2,0; f1,f2,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"C1_F1", "1,1,1|2,1,1", "f0+f1,f2,0; f1+f2,f0,0; f1+f2,0,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"C1_F2", "1,1,1|2,1,2", "f0+f1,f2,0; f1+f2,f0,0; f1,f2,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"C1_F3", "1,1,1|2,3,2", "f0+f1,f2,0; f1,f0,f2; f1,f2,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"E6_F5", "1,1,3|3,3,1", "f0+f1,0,f2; f1,f0,f2; f2,0,f0+f1", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"F1_F4", "2,1,1|3,3,2", "f0,f1,f2; f1,f0,f2; f1,f2,f0", 2, "C3L2", "distinct-real-always", "none", nullptr},
  {"C1_C2", "1,1,1|2,2,2", "f0+f1,f2,0; f1,f0+f2,0; f1,f2,f0", 3, "C2L3s", "semisimple-double", "none", nullptr},
  {"M6", "1,1,1|2,2,2|3,3,3|1,1,2|3,2,2|3,1,3", "f0+f1+f4,f2,f3+f5+f6; f1+f4+f6,f0+f2+f5,f3; f1,f2+f4+f5,f0+f3+f6", 0, "C3L0", "distinct-real-open", "open", nullptr},
};

// Expected eigenvalue/eigenvector expressions. A starred eigenvalue marks the
// defective one (algebraic multiplicity two, geometric one).
struct RawEigRow {
  const char* id;
  const char* value;
  bool defective;
  const char* v1; const char* v2; const char* v3;
};

inline constexpr RawEigRow kEigRows[] = {
  {"D1_E1", "f0", false, "0", "0", "1"},
  {"D1_E1", "f0+f2", false, "0", "f2/f1", "1"},
  {"D1_E1", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_F1", "f0", false, "0", "0", "1"},
  {"D1_F1", "f0-f2", false, "f2^2/(f1f2+f1^2-f2^2)", "-(f2(f1+f2))/(f1f2+f1^2-f2^2)", "1"},
  {"D1_F1", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_F2", "f0", false, "0", "0", "1"},
  {"D1_F2", "f0-f2", false, "f2^2/(f1+f2)^2", "-f2/(f1+f2)", "1"},
  {"D1_F2", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_B3", "f0+f2", false, "0", "0", "1"},
  {"D1_B3", "f0-f2", false, "(2f2^2)/(f1(f1+f2))", "-(2f2)/f1", "1"},
  {"D1_B3", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_B1", "f0+f2", false, "0", "1", "1"},
  {"C1_B1", "f0-f2", false, "0", "-1", "1"},
  {"C1_B1", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_F4", "f0", false, "-f2/f1", "0", "1"},
  {"D1_F4", "f0-f2", false, "-f2/(f1+f2)", "-f2/(f1+f2)", "1"},
  {"D1_F4", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_B3", "f0+f2", false, "0", "0", "1"},
  {"C1_B3", "f0-f2", false, "-(2f2)/f1", "(2(f1+f2))/f1", "1"},
  {"C1_B3", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F3", "f0+f1", false, "-f2/f1", "0", "1"},
  {"E6_F3", "f0-f2", false, "1", "-(f1+f2)/f2", "1"},
  {"E6_F3", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_E6", "f0", false, "0", "-f2/f1", "1"},
  {"D1_E6", "f0+f2", false, "0", "0", "1"},
  {"D1_E6", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F6", "f0", false, "0", "1", "0"},
  {"E6_F6", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F6", "f0+f1-f2", false, "-1", "-(f1+f2)/(f1-f2)", "1"},
  {"E6_F4", "f0", false, "-f2/f1", "-f1/f2", "1"},
  {"E6_F4", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F4", "f0+f1-f2", false, "-1", "-1", "1"},
  {"B1_F1", "f0-f1", false, "(f1f2)/(2f1^2-f2^2)", "-(2f1^2)/(2f1^2-f2^2)", "1"},
  {"B1_F1", "f0+f1+f2", false, "1", "1", "1"},
  {"B1_F1", "f0+f1-f2", false, "-1", "1", "1"},
  {"F1_F2", "f0", false, "0", "0", "1"},
  {"F1_F2", "f0-f1-f2", false, "-(f1+f2)/(f1-f2)", "(f1+f2)/(f1-f2)", "1"},
  {"F1_F2", "f0+f1+f2", false, "1", "1", "1"},
  {"F1_F3", "f0-f1", false, "-(f1+f2)/f1", "1", "1"},
  {"F1_F3", "f0-f2", false, "-(f2(f1+f2))/(f1f2+f1^2-f2^2)", "f2^2/(f1f2+f1^2-f2^2)", "1"},
  {"F1_F3", "f0+f1+f2", false, "1", "1", "1"},
  {"F1_F6", "f0", false, "0", "-f2/f1", "1"},
  {"F1_F6", "f0-f1-f2", false, "-1", "1", "1"},
  {"F1_F6", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_F5", "f0", false, "-f2/f1", "f2^2/f1^2", "1"},
  {"D1_F5", "f0-f2", false, "-f2/(f1+f2)", "-f2/(f1+f2)", "1"},
  {"D1_F5", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_E4", "f0", false, "0", "1", "0"},
  {"E6_E4", "f0+f1+f2", false, "(f1+f2)/f1", "1", "0"},
  {"E6_E4", "f0+f1+f2", false, "-f2/f1", "0", "1"},
  {"C1_D1", "f0", true, "0", "0", "1"},
  {"C1_D1", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_D4", "f0", true, "0", "0", "1"},
  {"C1_D4", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_D6", "f0", true, "-f2/f1", "1", "1"},
  {"C1_D6", "f0+f1+f2", false, "1", "1", "1"},
  {"D1_D4", "f0", true, "0", "0", "1"},
  {"D1_D4", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_E6", "f0", false, "0", "1", "0"},
  {"C1_E6", "f0+f2", false, "0", "0", "1"},
  {"C1_E6", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_E3", "f0", false, "0", "0", "1"},
  {"C1_E3", "f0+f2", false, "0", "1", "1"},
  {"C1_E3", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_F1", "f0", false, "0", "0", "1"},
  {"C1_F1", "f0-f2", false, "-f2/(f1+f2)", "1", "1"},
  {"C1_F1", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_F2", "f0", false, "0", "0", "1"},
  {"C1_F2", "f0-f2", false, "1", "-(f1+f2)/f2", "1"},
  {"C1_F2", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_F3", "f0", false, "-f2/f1", "1", "1"},
  {"C1_F3", "f0-f2", false, "1", "-(f1+f2)/f2", "1"},
  {"C1_F3", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F5", "f0", false, "0", "1", "0"},
  {"E6_F5", "f0+f1+f2", false, "1", "1", "1"},
  {"E6_F5", "f0+f1-f2", false, "-1", "-1", "1"},
  {"F1_F4", "f0-f1", false, "-(f1+f2)/f1", "1", "1"},
  {"F1_F4", "f0-f2", false, "-f2/(f1+f2)", "-f2/(f1+f2)", "1"},
  {"F1_F4", "f0+f1+f2", false, "1", "1", "1"},
  {"C1_C2", "f0", false, "-f2/f1", "1", "0"},
  {"C1_C2", "f0", false, "0", "0", "1"},
  {"C1_C2", "f0+f1+f2", false, "1", "1", "1"},
};

}  // namespace ccn::detail
