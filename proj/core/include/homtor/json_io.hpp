#pragma once

// String-level JSON serialisation; the underlying JSON library is an
// implementation detail and never crosses this interface.

#include <optional>
#include <string>
#include <vector>

#include "homtor/reps.hpp"
#include "homtor/rohlin.hpp"

namespace homtor::io {

// Representation class record: kind, q, n, (k, l) and the v angle where
// they apply, the full image table, orbit size, stabilizer characters as
// (u,v,a,y) bit strings, and the six w2 bits.
std::string rep_class_to_json(const rep::RepClass& c);

// Parsed counterpart of rep_class_to_json; rebuild_rep reconstructs the
// stored representation from the image table for re-analysis.
struct ParsedClass {
  std::string kind;
  int q = 1, n = 4;
  int k = 0, l = 0;
  std::string v_angle;
  std::vector<std::pair<std::string, std::string>> images;  // generator, literal
  int orbit = 0;
  std::vector<std::string> stabilizer;
  rep::W2Bits w2;
};
ParsedClass class_from_json(const std::string& text);
rep::ProjRep rebuild_rep(const ParsedClass& c);

std::string lambda_report_to_json(const rep::LambdaReport& rep);

// {"dim":3,"mode":"z2","t":1,"values":{"000":0,...}} with little-endian
// bit-string keys (character i is the coefficient of basis vector i).
std::string spin_assignment_to_json(const rohlin::SpinAssignment& a,
                                    std::optional<bool> t);
rohlin::SpinAssignment spin_assignment_from_json(const std::string& text,
                                                 std::optional<bool>* t_out);

std::string w2_to_json(const rep::W2Bits& w);

}  // namespace homtor::io
