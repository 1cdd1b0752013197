#pragma once

// The project file: one JSON document with named groups, complexes, actions,
// profiles, families, double complexes and homotopies. See docs/schema.md.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qss/errors.hpp"
#include "qss/exactla.hpp"
#include "qss/groupaction.hpp"
#include "qss/quillen.hpp"
#include "qss/semisimplicial.hpp"
#include "qss/spectral.hpp"

namespace qss::cli {

/// Malformed input. Syntax errors carry a 1-based line and column; schema
/// errors carry the JSON path of the offending value and line 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NameNotFound : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct HomotopySpec {
  std::string complex;
  la::ChainHomotopy homotopy;
  int up_to = 0;
};

struct Project {
  std::string version;
  std::map<std::string, std::shared_ptr<const grp::FiniteGroup>> groups;
  std::map<std::string, std::shared_ptr<const ss::SemiSimplicialComplex>> complexes;
  std::map<std::string, std::shared_ptr<const grp::GroupAction>> actions;
  std::map<std::string, quillen::StabilityProfile> profiles;
  std::map<std::string, quillen::QuillenFamily> families;
  std::map<std::string, spec::DoubleComplex> double_complexes;
  std::map<std::string, HomotopySpec> homotopies;

  /// Objects that were well formed but could not be built (a table that is
  /// not a group, generators that do not generate, ...), as "section 'name':
  /// reason". Their dependents are skipped and listed too.
  std::vector<std::string> problems;
  /// Every declared name per section, built or not.
  std::map<std::string, std::set<std::string>> declared;

  /// Throws NameNotFound naming the section and the known names.
  const std::shared_ptr<const grp::GroupAction>& action(const std::string& name) const;
  const quillen::StabilityProfile& profile(const std::string& name) const;
  const quillen::QuillenFamily& family(const std::string& name) const;
  const spec::DoubleComplex& double_complex(const std::string& name) const;
  const HomotopySpec& homotopy(const std::string& name) const;
  const std::shared_ptr<const ss::SemiSimplicialComplex>& complex(const std::string& name) const;

  bool declares(const std::string& section, const std::string& name) const;
};

/// Throws ParseError for syntax errors, schema violations and unresolved
/// cross-references.
Project parse_project(const std::string& text);
/// Reads the file, then parse_project. Unreadable files are a ParseError.
Project load_project(const std::string& path);

}  // namespace qss::cli
