#pragma once

#include <string>

#include "cesaro/expansion.hpp"
#include "cesaro/jsr.hpp"
#include "cesaro/linrep.hpp"
#include "cesaro/spectral.hpp"

namespace cesaro {

/// JSON rep-file schema:
///   {"radix": int, "dim": int, "scalar": "rational"|"complex",
///    "L": [entry...], "A": [[[entry...]...]...], "C": [entry...],
///    "eigen_hints": [entry...] (optional), "name": str (optional)}
/// Rational entries are integers or strings "p/q"; complex entries are
/// [re, im] pairs or plain numbers.
AnyRep parse_rep(const std::string& json_text);
AnyRep load_rep(const std::string& path);
std::string rep_to_json(const AnyRep& rep);
void save_rep(const AnyRep& rep, const std::string& path);

/// Report serialization (all floats at 17 significant digits).
std::string jsr_to_json(const JsrEstimate& est);
std::string eigen_to_json(const EigenStructure& es,
                          const std::vector<JordanChain>& chains,
                          const CDecomposition& dec);
std::string expansion_to_json(const IntegerExpansion& exp);
std::string word_expansion_to_json(const WordExpansion& exp);

/// CSV exports.
std::string grid_to_csv(const SolutionGrid& grid);      ///< x, re/im columns
std::string profile_to_csv(const std::vector<double>& t,
                           const std::vector<CMat>& values);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace cesaro
