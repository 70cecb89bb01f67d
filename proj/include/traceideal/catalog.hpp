#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "traceideal/trace.hpp"

namespace traceideal {

// Integer expressions over named parameters: + - * / (exact, errors when the
// division leaves a remainder) // (floor) % and min/max.  Used for exponents,
// index ranges and conditions in catalog files.
class ParamExpr {
  public:
    struct Node;

    static ParamExpr parse(const std::string& text);
    long eval(const std::map<std::string, long>& env) const;
    const std::string& text() const { return text_; }

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

// Comparison chains like "j % 2 == 0 and j <= n-2".
class ParamCond {
  public:
    static ParamCond parse(const std::string& text);
    bool eval(const std::map<std::string, long>& env) const;
    const std::string& text() const { return text_; }
    bool trivial() const { return clauses_.empty(); }

  private:
    struct Clause {
        ParamExpr lhs, rhs;
        std::string op;
    };
    std::vector<Clause> clauses_;
    std::string text_;
};

// A polynomial whose exponents are parameter expressions; instantiating with
// an environment yields a concrete Polynomial.
class TemplatePoly {
  public:
    static TemplatePoly parse(const std::string& text);
    Polynomial instantiate(const RingPtr& ring, const std::map<std::string, long>& env) const;
    const std::string& text() const { return text_; }

  private:
    struct TTerm {
        bool negative = false;
        mpq_class coef = 1;
        bool has_i = false;
        std::vector<std::pair<std::string, ParamExpr>> powers;
    };
    std::vector<TTerm> terms_;
    std::string text_;
};

// One module descriptor in a catalog file: a fixed module or an indexed
// family ("for j = a .. b if <cond>"), given by a z-form matrix or by a plain
// presentation (with an optional factorization partner used for validation).
struct CatalogModuleSpec {
    std::string label;  // "phi_{j}" style template
    std::optional<std::string> index_var;
    ParamExpr range_lo, range_hi;  // meaningful when index_var is set
    ParamCond condition;
    bool is_presentation = false;
    std::vector<std::vector<TemplatePoly>> matrix;   // phi or presentation
    std::vector<std::vector<TemplatePoly>> partner;  // presentation partner, may be empty
    std::vector<TemplatePoly> tau;                   // expected trace ideal generators
    bool tau_derived = false;  // true: derived consistency value, not a paper claim
};

// A parsed catalog file: ring constructor, parameter domain, module
// descriptors and the expected test ideal of the family.
struct CatalogEntry {
    std::string family;
    std::vector<std::string> ring_vars;
    FieldSpec min_field;                  // QQ or QQi
    std::vector<unsigned long> bad_chars; // rejected F_p characteristics
    std::optional<std::string> param;     // at most one integer parameter
    ParamCond domain;
    TemplatePoly equation;
    std::optional<std::string> zvar;
    std::vector<CatalogModuleSpec> modules;
    std::vector<TemplatePoly> tau_mcm;
    std::string source_path;
};

// A module instantiated at concrete parameter values.
struct CatalogModule {
    std::string label;
    McmModule module;
    std::optional<Ideal> expected_tau;
    std::string expected_tau_text;  // instantiated literal, quoted in reports
    bool tau_derived = false;
};

struct CatalogInstance {
    std::string family;
    std::optional<long> param;
    RingPtr ring;
    // non-free modules only; entries whose trace ideal is (1) are dropped
    std::vector<CatalogModule> modules;
    std::optional<Ideal> expected_tau_mcm;
    std::string expected_tau_mcm_text;
    // labels of range entries excluded because their trace ideal was (1)
    std::vector<std::string> excluded_free;
};

class Catalog {
  public:
    // Loads every *.cat file in dir.  The default directory is taken from
    // TRACEIDEAL_CATALOG_DIR, falling back to the source-tree data/catalog.
    static Catalog load(const std::string& dir = "");
    static std::string default_dir();

    std::vector<std::string> families() const;
    const CatalogEntry& entry(const std::string& family) const;

    // Build the ring and all modules at a parameter value.  field_override
    // replaces the entry's minimum field (rejected if it cannot express i
    // when required, or has a forbidden characteristic).
    CatalogInstance instantiate(const std::string& family, std::optional<long> param = {},
                                std::optional<FieldSpec> field_override = {}) const;

  private:
    std::vector<CatalogEntry> entries_;
};

// The verification grid: every (family, parameter) pair exercised by the
// acceptance criteria.
struct GridItem {
    std::string family;
    std::optional<long> param;
};
std::vector<GridItem> acceptance_grid();

}  // namespace traceideal
