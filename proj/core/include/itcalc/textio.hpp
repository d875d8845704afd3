#pragma once

// Text formats: algebras (.alg), modules (.mod), complexes (.cpx) and the
// module expressions shared by the command line and complex files.
//
//   .alg   field <p> / vertices <n> / arrow <id>: <i> -> <j> /
//          relation <id> <id> ... / admissibility_cap <N>
//   .mod   module <name> / dims <d_1> ... <d_n> / map <id> <row-major entries>
//   .cpx   complex / degree <i>: <expr> / diff <i>: <entries>
//
// Vertices are numbered from 1 in every format. '#' starts a comment.
// Differential entries list, vertex by vertex, the row-major matrix of d^i
// at that vertex; '|' may separate the vertices.
//
// Expression grammar: term ('+' term)*, where a term is one of S(i), P(i),
// I(i), P(i)/rad^k, A, file:<path> or a module name, optionally followed by
// ^<multiplicity>.

#include "itcalc/algebra.hpp"
#include "itcalc/complex.hpp"
#include "itcalc/rep.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace itcalc {

AlgebraPtr parse_algebra(std::string_view text);
AlgebraPtr load_algebra(const std::filesystem::path& path);
std::string format_algebra(const Algebra& a);

std::vector<std::pair<std::string, Rep>> parse_modules(const AlgebraPtr& a, std::string_view text);
std::string format_module(const std::string& name, const Rep& m);

struct ModuleContext {
  AlgebraPtr algebra;
  /// Modules that expressions may refer to by name.
  std::map<std::string, Rep> names;
  /// Relative file: paths resolve against this directory.
  std::filesystem::path base_dir = ".";
};

/// Loads every module of a .mod file into ctx.names.
void load_modules(ModuleContext& ctx, const std::filesystem::path& path);

/// `line` and `column` locate the expression for error messages.
Rep parse_module_expr(const ModuleContext& ctx, std::string_view expr, int line = 1, int column = 1);

Complex parse_complex(const ModuleContext& ctx, std::string_view text);
Complex load_complex(const ModuleContext& ctx, const std::filesystem::path& path);

/// S(i), P(i), I(i) or P(i)/rad^k when the indecomposable is isomorphic to
/// one of them.
std::optional<std::string> standard_name(const Rep& indecomposable);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace itcalc
