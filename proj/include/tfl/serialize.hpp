#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tfl/invariants.hpp"

namespace tfl {

/// Ordered so that emitted documents keep insertion order and are byte-stable.
using Json = nlohmann::ordered_json;

/// Malformed or invalid input documents; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json field_to_json(const FieldSpec& spec);
/// Accepts "gf:p", "qq", {"kind":"gf","p":p} and {"kind":"qq"}.
FieldSpec field_from_json(const Json& j);

/// Field an algebra document asks for, or `fallback` when it names none. "builtin:NAME" sources
/// always use the fallback.
FieldSpec algebra_field(const Json& doc, const FieldSpec& fallback);

template <class F>
Json element_to_json(const F& field, const typename F::Elem& e);
template <class F>
typename F::Elem element_from_json(const F& field, const Json& j);

/// Row-major list of rows; entries are strings.
template <class F>
Json matrix_to_json(const Matrix<F>& m);
template <class F>
Matrix<F> matrix_from_json(const F& field, const Json& j, std::size_t rows, std::size_t cols);
template <class F>
Json vector_to_json(const F& field, const Vec<F>& v);
template <class F>
Vec<F> vector_from_json(const F& field, const Json& j, std::size_t len);

/// Quiver schema when the algebra remembers its quiver, structure-constant schema otherwise.
template <class F>
Json algebra_to_json(const Algebra<F>& a);
template <class F>
Json structure_constants_json(const Algebra<F>& a);
/// Parses and validates either schema, or a {"builtin": NAME} document.
template <class F>
Algebra<F> algebra_from_json(const Json& j, const F& field);

template <class F>
Json module_to_json(const Mod<F>& m);
template <class F>
Mod<F> module_from_json(const Json& j, const RingPtr<F>& ring);

template <class F>
Json sequence_to_json(const ExactSeq<F>& s);
template <class F>
ExactSeq<F> sequence_from_json(const Json& j, const RingPtr<F>& ring);

Json dim_result_to_json(const DimResult& d);
Json torsionfree_dimension_to_json(const TorsionfreeDimension& t);
Json certified_flag_to_json(const CertifiedFlag& f);

/// Reads a JSON file, or {"builtin": NAME} for the pseudo-path "builtin:NAME".
Json load_document(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace tfl
