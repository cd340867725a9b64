#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "unip/jordan_calculus.hpp"
#include "unip/jordan_type.hpp"
#include "unip/module_expr.hpp"

namespace unip {

enum class ModuleTag { Adjoint, Minimal, Natural };

ModuleTag parse_module_tag(const std::string &s);
std::string to_string(ModuleTag t);

struct ClassEntry {
    std::string group;             // "E6", "D4"
    std::optional<std::int64_t> p; // nullopt = wildcard
    ModuleTag module;
    JordanType jordan;
    std::string label;
    std::string source;
};

/// Unipotent class table, one entry per (group, p, module, partition).
///
/// TSV columns: group, p ('*' or a prime), module tag, partition, label,
/// source. Lines starting with '#' and blank lines are ignored.
class ClassTable {
  public:
    ClassTable() = default;

    // Validates the entry (dimension, uniqueness) before inserting.
    void add(ClassEntry entry);

    const std::vector<ClassEntry> &entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    // Reverse of load; partitions are written in canonical form.
    std::string to_tsv() const;

  private:
    std::vector<ClassEntry> entries_;
};

// Throws ParseError (line number in the message) or DomainError.
ClassTable load_class_table(const std::string &path);
ClassTable parse_class_table(std::istream &in);

// Module dimension expected for a tabulated group; p selects the
// characteristic-dependent minimal modules of G2/F4 (nullopt = generic).
std::int64_t expected_module_dim(const std::string &group, ModuleTag tag, std::optional<std::int64_t> p);

struct Identification {
    std::optional<std::string> label;
    // Closest entries by partition distance when nothing matched.
    std::vector<const ClassEntry *> nearest;
};

// Exact-p rows shadow wildcard rows.
Identification identify_class(const ClassTable &table, const std::string &group, std::int64_t p,
                              ModuleTag module, const JordanType &t);

struct ExprIdentification {
    Evaluation evaluation;
    Identification result;
    std::vector<std::string> warnings;
};

ExprIdentification identify_from_expr(const ClassTable &table, const std::string &group, std::int64_t p,
                                      const ModuleExpr &e, ModuleTag module = ModuleTag::Adjoint);

} // namespace unip
