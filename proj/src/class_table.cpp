#include "unip/class_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unip/error.hpp"
#include "unip/primes.hpp"
#include "unip/root_data.hpp"

namespace unip {

ModuleTag parse_module_tag(const std::string &s) {
    if (s == "adjoint")
        return ModuleTag::Adjoint;
    if (s == "minimal")
        return ModuleTag::Minimal;
    if (s == "natural")
        return ModuleTag::Natural;
    throw DomainError("unknown module tag '" + s + "' (expected adjoint, minimal or natural)");
}

std::string to_string(ModuleTag t) {
    switch (t) {
    case ModuleTag::Adjoint:
        return "adjoint";
    case ModuleTag::Minimal:
        return "minimal";
    case ModuleTag::Natural:
        return "natural";
    }
    return "?";
}

std::int64_t expected_module_dim(const std::string &group, ModuleTag tag, std::optional<std::int64_t> p) {
    const auto rs = RootSystem::parse(group);
    if (tag == ModuleTag::Adjoint)
        return rs.adjoint_dim();
    Weight w(static_cast<std::size_t>(rs.rank()), 0);
    switch (rs.type()) {
    case RootType::A:
    case RootType::B:
    case RootType::C:
    case RootType::D:
    case RootType::G:
        w.front() = 1;
        break;
    case RootType::F:
        w.back() = 1;
        break;
    case RootType::E:
        if (rs.rank() == 6)
            w.front() = 1;
        else
            w.back() = 1;
        break;
    }
    // The minimal modules of G2 and F4 are the quasi-minuscule ones, which lose
    // a trivial composition factor in small characteristic.
    if (p && (rs.type() == RootType::G || rs.type() == RootType::F))
        return qm_structure(rs, *p).dim_irreducible;
    return weyl_dim(rs, w);
}

namespace {

std::string key_text(const ClassEntry &e) {
    return e.group + "/" + (e.p ? std::to_string(*e.p) : std::string("*")) + "/" + to_string(e.module) + "/" +
           e.jordan.to_string();
}

bool same_key(const ClassEntry &a, const ClassEntry &b) {
    return a.group == b.group && a.p == b.p && a.module == b.module && a.jordan == b.jordan;
}

std::vector<std::string> split_tabs(const std::string &line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos)
            break;
        start = tab + 1;
    }
    return cols;
}

} // namespace

void ClassTable::add(ClassEntry entry) {
    const auto rs = RootSystem::parse(entry.group);
    entry.group = rs.name();
    if (entry.p)
        require_prime(*entry.p);
    // Dimension must match the module, for the stated p or generically.
    const std::int64_t want = expected_module_dim(entry.group, entry.module, entry.p);
    bool ok = entry.jordan.dim() == want;
    if (!ok && !entry.p && (rs.type() == RootType::G || rs.type() == RootType::F) &&
        entry.module != ModuleTag::Adjoint) {
        // Wildcard minimal-module rows may use either the generic or the small-p dimension.
        const std::int64_t small_p = rs.type() == RootType::G ? 2 : 3;
        ok = entry.jordan.dim() == expected_module_dim(entry.group, entry.module, small_p);
    }
    if (!ok)
        throw DomainError("partition " + entry.jordan.to_string() + " has dimension " +
                          std::to_string(entry.jordan.dim()) + " but the " + to_string(entry.module) +
                          " module of " + entry.group + " has dimension " + std::to_string(want));
    for (const auto &e : entries_)
        if (same_key(e, entry))
            throw DomainError("duplicate class table key " + key_text(entry));
    entries_.push_back(std::move(entry));
}

std::string ClassTable::to_tsv() const {
    std::string out;
    for (const auto &e : entries_) {
        out += e.group + '\t' + (e.p ? std::to_string(*e.p) : std::string("*")) + '\t' + to_string(e.module) + '\t' +
               e.jordan.to_string() + '\t' + e.label + '\t' + e.source + '\n';
    }
    return out;
}

ClassTable parse_class_table(std::istream &in) {
    ClassTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        const auto where = "class table line " + std::to_string(lineno) + ": ";
        const auto cols = split_tabs(line);
        if (cols.size() != 6)
            throw ParseError(where + "expected 6 tab-separated columns, found " + std::to_string(cols.size()), 0);
        ClassEntry e;
        e.group = cols[0];
        try {
            if (cols[1] != "*") {
                std::size_t used = 0;
                e.p = std::stoll(cols[1], &used);
                if (used != cols[1].size())
                    throw ParseError(where + "bad characteristic '" + cols[1] + "'", cols[0].size() + 1 + used);
            }
        } catch (const std::logic_error &) {
            throw ParseError(where + "bad characteristic '" + cols[1] + "'", cols[0].size() + 1);
        }
        try {
            e.module = parse_module_tag(cols[2]);
            e.jordan = JordanType::parse(cols[3]);
        } catch (const ParseError &err) {
            throw ParseError(where + "bad partition: " + err.what(), err.position());
        } catch (const DomainError &err) {
            throw DomainError(where + err.what());
        }
        if (e.jordan.to_string() != cols[3])
            throw ParseError(where + "partition '" + cols[3] + "' is not in canonical form '" +
                                 e.jordan.to_string() + "'",
                             0);
        e.label = cols[4];
        e.source = cols[5];
        if (e.label.empty())
            throw ParseError(where + "empty label", 0);
        try {
            table.add(std::move(e));
        } catch (const DomainError &err) {
            throw DomainError(where + err.what());
        }
    }
    return table;
}

ClassTable load_class_table(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open class table '" + path + "'");
    return parse_class_table(in);
}

Identification identify_class(const ClassTable &table, const std::string &group, std::int64_t p, ModuleTag module,
                              const JordanType &t) {
    require_prime(p);
    const auto name = RootSystem::parse(group).name();
    std::vector<const ClassEntry *> candidates;
    for (const auto &e : table.entries())
        if (e.group == name && e.module == module && (!e.p || *e.p == p))
            candidates.push_back(&e);
    Identification id;
    const ClassEntry *wild = nullptr;
    for (const auto *e : candidates) {
        if (!(e->jordan == t))
            continue;
        if (e->p) {
            id.label = e->label;
            return id;
        }
        wild = e;
    }
    if (wild) {
        id.label = wild->label;
        return id;
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](const ClassEntry *a, const ClassEntry *b) {
        return partition_distance(a->jordan, t) < partition_distance(b->jordan, t);
    });
    if (candidates.size() > 3)
        candidates.resize(3);
    id.nearest = std::move(candidates);
    return id;
}

ExprIdentification identify_from_expr(const ClassTable &table, const std::string &group, std::int64_t p,
                                      const ModuleExpr &e, ModuleTag module) {
    ExprIdentification out;
    out.evaluation = eval_expr(e, p);
    const auto want = expected_module_dim(group, module, p);
    if (out.evaluation.dim != want)
        out.warnings.push_back("expression has dimension " + std::to_string(out.evaluation.dim) + " but the " +
                               to_string(module) + " module of " + RootSystem::parse(group).name() +
                               " has dimension " + std::to_string(want));
    out.result = identify_class(table, group, p, module, out.evaluation.jordan);
    return out;
}

} // namespace unip
