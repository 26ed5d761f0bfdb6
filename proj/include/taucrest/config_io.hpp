#pragma once

// The line-oriented input format:
//
//   [quiver]      vertices = n / arrow a: 1 -> 2
//   [relations]   nilpotent = L / coeff * path +- coeff * path ... (paths as b.a: a first)
//   [bimodule]    regular | dual | zero | triangular self | triangular dual |
//                 triangular <file> | custom (then dim = k and action matrices)
//   [enum]        field = 2|Q, max-dim = N, seed = S
//   [module]      dims = [..] and arrow a = [[..]], or named = P(1) + S(2) + I(1)
//
// '#' starts a comment.  Errors carry "origin:line:".  Parsing is field
// agnostic (entries stay rational); instantiate() reduces into a field.

#include "taucrest/algebra.hpp"
#include "taucrest/repcat.hpp"
#include "taucrest/trivext.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taucrest {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RationalRows = std::vector<std::vector<mpq_class>>;

struct ActionLine {
  bool left = true;
  bool vertex = true;  // vertex idempotent or arrow
  std::string name;    // 1-based vertex number or arrow label
  RationalRows matrix;
  std::size_t line = 0;
};

struct BimoduleSpec {
  enum class Kind { Regular, Dual, Zero, TriangularSelf, TriangularDual, TriangularFile, Custom };
  Kind kind = Kind::Regular;
  std::string file_ref;
  std::size_t dim = 0;
  std::vector<ActionLine> actions;
  std::size_t line = 0;
};

struct ModuleSpec {
  struct Named {
    char kind;  // 'P', 'S' or 'I'
    std::size_t vertex;
    std::size_t multiplicity;
  };
  bool present = false;
  std::vector<std::size_t> dims;
  std::vector<std::pair<std::string, RationalRows>> arrows;
  std::vector<Named> named;
  std::size_t line = 0;
};

struct EnumSpec {
  std::optional<std::string> field;
  std::optional<std::size_t> max_dim;
  std::optional<std::uint64_t> seed;
};

struct InputFile {
  std::string origin;
  AlgebraPresentation presentation;
  bool has_bimodule = false;
  BimoduleSpec bimodule;
  EnumSpec enumeration;
  ModuleSpec module;
};

InputFile parse_input(const std::string& text, const std::string& origin);
/// Throws InputError("cannot open <path>") for unreadable files.
InputFile load_input(const std::string& path);

/// "2", "3", "Q", "q" -> Field; throws InputError otherwise.
Field parse_field(const std::string& s);

struct Configuration {
  Algebra base;       // the algebra of the file (R for triangular inputs)
  Algebra algebra;    // the algebra A that M lives over (R x S for triangular inputs)
  Bimodule bimodule;
  ExtPtr ext;
  std::optional<Rep> module;
  std::string description;
};

/// Builds algebra, bimodule and optional module over `field`.  Triangular
/// file references are resolved relative to the origin's directory.
Configuration instantiate(const InputFile& in, Field field);

/// Source text of the two built-in configurations ("a2_dual",
/// "a2_lower_triangular").
const std::string& builtin_input(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace taucrest
