// JSON file formats. Every document written here carries
// "format_version": 1; readers accept documents with or without it.
//
//   solution   {"n", "sigma", "rho"}          sigma[a][b], rho[b][a]
//   map        {"k"}
//   shelf      {"n", "tri"}
//   twist      {"n", "F", "Phi", "Psi"}       F[a][b] = [x, y]; Phi and Psi
//                                             list the image triple of each
//                                             code a*n*n + b*n + c
//   group      {"n", "mul", "identity"}
//   skew brace {"n", "add", "mul"}
//   family     {"maps"}
//   classes    {"degree", "classes"}
//
// A shelf file is accepted wherever a solution is expected and stands for
// its rack solution r(a, b) = (b, a ◁ b).
//
// Malformed documents raise InputError with kind "FormatError", or the
// ShapeError / RangeError of the underlying validator.

#ifndef REFLECTWIST_IO_HPP_
#define REFLECTWIST_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "reflectwist/braided_group.hpp"
#include "reflectwist/monoid.hpp"

namespace reflectwist::io {

  using Json = nlohmann::json;

  inline constexpr int format_version = 1;

  Json read_file(std::string const& path);
  // One line, no trailing newline.
  std::string dump(Json const& j);

  Word  word_from_json(Json const& j, char const* what);
  Table table_from_json(Json const& j, char const* what);
  Json  field(Json const& doc, char const* key);

  // The raw map (a, b) -> (sigma[a][b], rho[b][a]), without the YBE check.
  SquareMap  solution_map_from_json(Json const& doc);
  BraidedSet solution_from_json(Json const& doc);
  Json       to_json(BraidedSet const& bs);
  Json       solution_to_json(SquareMap const& r);

  FiniteMap map_from_json(Json const& doc);
  Json      to_json(FiniteMap const& k);

  Shelf shelf_from_json(Json const& doc);
  bool  is_shelf(Json const& doc);

  TwistDatum twist_from_json(Json const& doc);
  Json       to_json(TwistDatum const& t);

  FiniteGroup group_from_json(Json const& doc);
  Json        to_json(FiniteGroup const& g);

  SkewBrace brace_from_json(Json const& doc);
  Json      to_json(SkewBrace const& sb);

  std::vector<FiniteMap> family_from_json(Json const& doc);
  Json                   family_to_json(std::vector<FiniteMap> const& fam);

  Json to_json(GradedComponent const& c);

  // {"ok"} plus "axiom" and "witness" on failure.
  Json to_json(Report const& r);
  // {"kind", "message", "witness"}
  Json to_json(Error const& e);

  // Adds "format_version" to an object.
  Json versioned(Json j);

}  // namespace reflectwist::io

#endif  // REFLECTWIST_IO_HPP_
