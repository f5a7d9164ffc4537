#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "supercluster/characters.hpp"
#include "supercluster/cyclotomic.hpp"
#include "supercluster/discrete.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/tensor.hpp"

// Text encodings. All output is deterministic: fixed key order, fixed row and
// column order, exact values only.
namespace supercluster::io {

/// {"kind":"nil"|"uni"|"fun","n":3,"entries":[{"i":1,"j":3,"v":"1"}]}
std::string to_json(const Field& F, const NilMatrix& x);
std::string to_json(const Field& F, const UniMatrix& g);
std::string to_json(const Field& F, const Functional& f);
NilMatrix nil_from_json(const Field& F, std::string_view text);
UniMatrix uni_from_json(const Field& F, std::string_view text);
Functional fun_from_json(const Field& F, std::string_view text);

/// {"p":3,"coeffs":["1/1","0/1"]}
std::string to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(std::string_view text);

std::string table_json(const CharacterTable& table);
/// Header row of adjoint templates; each row starts with its coadjoint
/// template. Values in polynomial form ("2", "-2", "1-z").
std::string table_csv(const CharacterTable& table);
std::string table_text(const CharacterTable& table);
/// Inverse of table_json. Throws ArgumentError on malformed input.
CharacterTable table_from_json(std::string_view text);

/// One record per template: d, i, cluster and superclass sizes, degree.
std::string clusters_json(const Field& F, const std::vector<Template>& templates);
std::string clusters_csv(const Field& F, const std::vector<Template>& templates);
std::string clusters_text(const Field& F, const std::vector<Template>& templates);

/// {"terms":[{"template":"(1,2)=1","mult":1}],"total_degree":"4"}
std::string tensor_json(const CharSum& sum);
std::string tensor_csv(const CharSum& sum);
std::string tensor_text(const CharSum& sum);

/// {"identity_value":"3","terms":[{"template":"(1,3)=1","mult":1}]}
std::string discrete_json(const DeltaDecomposition& dec);
std::string discrete_csv(const DeltaDecomposition& dec);
std::string discrete_text(const DeltaDecomposition& dec);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace supercluster::io
