// Command-line front end: one subcommand per library operation.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "unip/class_table.hpp"
#include "unip/classical.hpp"
#include "unip/error.hpp"
#include "unip/ext_classify.hpp"
#include "unip/jordan_calculus.hpp"
#include "unip/oracle.hpp"
#include "unip/parser.hpp"
#include "unip/primes.hpp"
#include "unip/root_data.hpp"

#ifndef UNIP_DATA_DIR
#define UNIP_DATA_DIR ""
#endif

using namespace unip;
using nlohmann::json;

namespace {

struct Options {
    std::int64_t p = 0;
    bool json = false;
    bool oracle = false;
    std::int64_t dim_cap = 4096;
    std::string table;
    std::string group;
    std::string module = "adjoint";
    std::int64_t dim = 0;
    bool attested = false;
    bool self_dual = false;
    bool certificate = false;
    std::string strategy = "dense";
    std::string expr, partition;
    std::int64_t a = 0, b = 0;
};

json jordan_json(const JordanType &t) {
    auto out = json::array();
    for (auto [s, m] : t.blocks())
        out.push_back({s, m});
    return out;
}

json character_json(const Character &c) {
    auto out = json::array();
    for (auto [w, m] : c.weights())
        out.push_back({w, m});
    return out;
}

// Prints either the JSON document or the human lines.
void emit(const Options &o, const json &doc, const std::string &human) {
    if (o.json)
        std::cout << doc.dump() << '\n';
    else
        std::cout << human;
}

std::int64_t prime(const Options &o) {
    if (o.p == 0)
        throw CLI::ValidationError("-p", "a prime characteristic is required");
    require_prime(o.p);
    return o.p;
}

std::string table_path(const Options &o) {
    if (!o.table.empty())
        return o.table;
    if (const char *env = std::getenv("UNIP_CLASS_TABLE"); env && *env)
        return env;
    const std::string bundled = std::string(UNIP_DATA_DIR) + "/classes.tsv";
    if (!std::string(UNIP_DATA_DIR).empty() && std::filesystem::exists(bundled))
        return bundled;
    throw CLI::ValidationError("--table", "no class table given and UNIP_CLASS_TABLE is unset");
}

int cmd_jordan(const Options &o) {
    const auto p = prime(o);
    const auto e = parse_expr(o.expr);
    const auto r = eval_expr(*e, p);
    if (o.oracle) {
        if (contains_tilting(*e)) {
            std::cerr << "warning: oracle check skipped, the expression contains T atoms\n";
        } else {
            const auto check = oracle_eval(*e, static_cast<std::uint32_t>(p), {o.dim_cap});
            if (!(check.jordan == r.jordan)) {
                std::cerr << "error: oracle mismatch: formula " << r.jordan.to_string() << ", matrix "
                          << check.jordan.to_string() << '\n';
                return 1;
            }
        }
    }
    emit(o, {{"dim", r.dim}, {"jordan", jordan_json(r.jordan)}, {"character", character_json(r.character)}},
         r.jordan.to_string() + '\n');
    return 0;
}

int cmd_tensor(const Options &o) {
    const auto t = tensor_jordan(o.a, o.b, prime(o));
    emit(o, {{"dim", t.dim()}, {"jordan", jordan_json(t)}}, t.to_string() + '\n');
    return 0;
}

int cmd_weyl(const Options &o) {
    const auto p = prime(o);
    const auto t = weyl_jordan(o.a, p);
    emit(o, {{"dim", t.dim()}, {"jordan", jordan_json(t)}, {"character", character_json(weyl_char(o.a))}},
         t.to_string() + '\n');
    return 0;
}

int cmd_tilting(const Options &o) {
    const auto p = prime(o);
    const auto t = tilting_jordan(o.a, p);
    const auto ch = tilting_char(o.a, p);
    emit(o, {{"dim", ch.dim()}, {"jordan", jordan_json(t)}, {"character", character_json(ch)}},
         t.to_string() + "\ndim " + std::to_string(ch.dim()) + '\n');
    return 0;
}

int cmd_ext(const Options &o) {
    const bool v = ext1_nonzero(o.a, o.b, prime(o));
    emit(o, {{"verdict", v}}, v ? "true\n" : "false\n");
    return 0;
}

int cmd_classify_ext(const Options &o) {
    const auto v = nonsplit_ext_classify(o.a, o.b, prime(o));
    json doc{{"verdict", v.to_string()}};
    std::string human = v.to_string() + '\n';
    if (!v.jordan.empty()) {
        doc["dim"] = v.jordan.dim();
        doc["jordan"] = jordan_json(v.jordan);
        human += v.jordan.to_string() + '\n';
    }
    emit(o, doc, human);
    return 0;
}

int cmd_enumerate(const Options &o) {
    const auto p = prime(o);
    const auto t = JordanType::parse(o.partition);
    auto list = json::array();
    std::string human;
    if (p == 2 && t == JordanType{2, 2}) {
        for (const auto &f : classify_dim4_p2()) {
            list.push_back({{"family", f.label}, {"template", f.templ}, {"constraint", f.constraint},
                            {"irreducible", f.irreducible}, {"indecomposable", f.indecomposable}});
            human += f.label + ' ' + f.templ + "  (" + f.constraint + ")\n";
        }
    } else {
        for (const auto &f : enumerate_indecomposables(t, p)) {
            list.push_back({{"kind", to_string(f.kind)}, {"template", f.templ}, {"constraint", f.constraint}});
            human += to_string(f.kind) + ' ' + f.templ + "  (" + f.constraint + ")\n";
        }
        if (list.empty())
            human = "none\n";
    }
    emit(o, {{"dim", t.dim()}, {"jordan", jordan_json(t)}, {"verdict", list}}, human);
    return 0;
}

int cmd_semisimple(const Options &o) {
    const auto t = JordanType::parse(o.partition);
    const auto v = to_string(semisimplicity_verdict(t, o.self_dual, prime(o)));
    emit(o, {{"dim", t.dim()}, {"jordan", jordan_json(t)}, {"verdict", v}}, v + '\n');
    return 0;
}

int cmd_distinguished(const Options &o) {
    const auto t = JordanType::parse(o.partition);
    const auto g = parse_classical_group(o.group);
    const auto space = o.dim ? o.dim : t.dim();
    const auto v = is_distinguished(g, prime(o), t, space, o.attested);
    json doc{{"dim", t.dim()}, {"jordan", jordan_json(t)}, {"verdict", v.distinguished}};
    std::string human = v.distinguished ? "true\n" : "false\n";
    if (!v.reason.empty()) {
        doc["reason"] = v.reason;
        human += "reason: " + v.reason + '\n';
    }
    if (v.requires_orthogonal_witness) {
        doc["requires_orthogonal_witness"] = true;
        human += "note: holds provided u preserves an orthogonal decomposition into these blocks\n";
    }
    emit(o, doc, human);
    return 0;
}

int cmd_lift(const Options &o) {
    if (o.p != 0 && o.p != 2)
        throw DomainError("the orthogonal lift is a characteristic 2 construction");
    const auto t = lift_quotient_to_orthogonal(JordanType::parse(o.partition), 2);
    emit(o, {{"dim", t.dim()}, {"jordan", jordan_json(t)}}, t.to_string() + '\n');
    return 0;
}

int cmd_qm(const Options &o) {
    const auto rs = RootSystem::parse(o.group);
    const auto q = qm_structure(rs, prime(o));
    const json detail{{"lambda", render_weight(q.lambda)},
                      {"structure", to_string(q.weyl_structure)},
                      {"weyl_series", q.weyl_series},
                      {"tilting_series", q.tilting_series},
                      {"dim_weyl", q.dim_weyl},
                      {"dim_irreducible", q.dim_irreducible},
                      {"dim_tilting", q.dim_tilting}};
    std::string human = rs.name() + " lambda = " + render_weight(q.lambda) + '\n' + "structure " +
                        to_string(q.weyl_structure) + '\n' + "V(lambda) = " + q.weyl_series + '\n' +
                        "T(lambda) = " + q.tilting_series + '\n' + "dim V " + std::to_string(q.dim_weyl) +
                        ", dim L " + std::to_string(q.dim_irreducible) + ", dim T " + std::to_string(q.dim_tilting) +
                        '\n';
    emit(o, {{"dim", q.dim_tilting}, {"verdict", detail}}, human);
    return 0;
}

int cmd_identify(const Options &o) {
    const auto p = prime(o);
    if (o.group.empty())
        throw CLI::ValidationError("--group", "required");
    if (o.expr.empty() == o.partition.empty())
        throw CLI::ValidationError("identify", "give exactly one of --expr or --jordan");
    const auto table = load_class_table(table_path(o));
    const auto tag = parse_module_tag(o.module);
    JordanType t;
    Identification id;
    if (!o.expr.empty()) {
        const auto r = identify_from_expr(table, o.group, p, *parse_expr(o.expr), tag);
        for (const auto &w : r.warnings)
            std::cerr << "warning: " << w << '\n';
        t = r.evaluation.jordan;
        id = r.result;
    } else {
        t = JordanType::parse(o.partition);
        id = identify_class(table, o.group, p, tag, t);
    }
    json doc{{"dim", t.dim()}, {"jordan", jordan_json(t)}, {"verdict", id.label ? "found" : "NotFound"}};
    std::string human;
    if (id.label) {
        doc["label"] = *id.label;
        human = *id.label + '\n';
    } else {
        human = "NotFound (" + t.to_string() + ")\n";
        auto near = json::array();
        for (const auto *e : id.nearest) {
            near.push_back({{"label", e->label}, {"jordan", jordan_json(e->jordan)},
                            {"distance", partition_distance(e->jordan, t)}});
            human += "  nearest: " + e->label + "  " + e->jordan.to_string() + "  (distance " +
                     std::to_string(partition_distance(e->jordan, t)) + ")\n";
        }
        doc["nearest"] = near;
    }
    emit(o, doc, human);
    return 0;
}

int cmd_oracle_verify(const Options &o) {
    const auto p = prime(o);
    const auto e = parse_expr(o.expr);
    OracleOptions opts{o.dim_cap, OracleStrategy::Dense};
    if (o.strategy == "block")
        opts.strategy = OracleStrategy::BlockReduced;
    const auto r = oracle_eval(*e, static_cast<std::uint32_t>(p), opts);
    const auto calc = eval_expr(*e, p).jordan;
    const bool agree = r.jordan == calc;
    if (o.certificate) {
        std::cout << oracle_certificate(*e, static_cast<std::uint32_t>(p), r) << '\n';
    } else {
        emit(o, {{"dim", r.dim}, {"jordan", jordan_json(r.jordan)}, {"verdict", agree ? "agree" : "mismatch"}},
             (agree ? "agree " : "MISMATCH ") + r.jordan.to_string() + '\n');
    }
    if (!agree)
        std::cerr << "error: formula gives " << calc.to_string() << '\n';
    return agree ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Jordan blocks of order-p unipotent elements on SL2-modules and related class data"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App *sub, bool needs_p = true) {
        auto *opt = sub->add_option("-p", o.p, "prime characteristic");
        if (needs_p)
            opt->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        return sub;
    };
    std::function<int()> run;
    auto bind = [&](CLI::App *sub, int (*fn)(const Options &)) { sub->callback([&run, fn, &o] { run = [fn, &o] { return fn(o); }; }); };

    auto *jordan = common(app.add_subcommand("jordan", "Jordan type of a module expression"));
    jordan->add_option("expr", o.expr, "module expression, e.g. \"L(14)+T(10)\"")->required();
    jordan->add_flag("--oracle", o.oracle, "recompute T-free expressions from explicit matrices");
    jordan->add_option("--dim-cap", o.dim_cap, "largest matrix the oracle will build");
    bind(jordan, cmd_jordan);

    auto *tensor = common(app.add_subcommand("tensor", "J_m (x) J_n"));
    tensor->add_option("m", o.a)->required();
    tensor->add_option("n", o.b)->required();
    bind(tensor, cmd_tensor);

    auto *weyl = common(app.add_subcommand("weyl", "Jordan type of the Weyl module V(m)"));
    weyl->add_option("m", o.a)->required()->check(CLI::NonNegativeNumber);
    bind(weyl, cmd_weyl);

    auto *tilting = common(app.add_subcommand("tilting", "Jordan type and dimension of T(c)"));
    tilting->add_option("c", o.a)->required()->check(CLI::NonNegativeNumber);
    bind(tilting, cmd_tilting);

    auto *ext = common(app.add_subcommand("ext", "whether Ext^1(L(a), L(b)) is nonzero"));
    ext->add_option("a", o.a)->required()->check(CLI::NonNegativeNumber);
    ext->add_option("b", o.b)->required()->check(CLI::NonNegativeNumber);
    bind(ext, cmd_ext);

    auto *cext = common(app.add_subcommand("classify-ext", "the nonsplit extension of L(a) by L(b)"));
    cext->add_option("a", o.a)->required()->check(CLI::NonNegativeNumber);
    cext->add_option("b", o.b)->required()->check(CLI::NonNegativeNumber);
    bind(cext, cmd_classify_ext);

    auto *en = common(app.add_subcommand("enumerate", "indecomposable families with a given Jordan type"));
    en->add_option("partition", o.partition, "e.g. \"5 2\" or \"5^2 1\"")->required();
    bind(en, cmd_enumerate);

    auto *ss = common(app.add_subcommand("semisimple", "semisimplicity forced by the Jordan type"));
    ss->add_option("partition", o.partition)->required();
    ss->add_flag("--self-dual", o.self_dual, "the module is self-dual");
    bind(ss, cmd_semisimple);

    auto *dist = common(app.add_subcommand("distinguished", "distinguishedness in SL, Sp or SO"));
    dist->add_option("partition", o.partition)->required();
    dist->add_option("--group", o.group, "SL, Sp or SO")->required();
    dist->add_option("--dim", o.dim, "dimension of the natural module (default: partition size)");
    dist->add_flag("--attested", o.attested, "an orthogonal decomposition into the blocks is known");
    bind(dist, cmd_distinguished);

    auto *lift = common(app.add_subcommand("lift-bd", "type on V from the type on v^perp/<v>, p = 2"), false);
    lift->add_option("partition", o.partition)->required();
    bind(lift, cmd_lift);

    auto *qm = common(app.add_subcommand("qm", "quasi-minuscule Weyl and tilting modules"));
    qm->add_option("--group", o.group, "e.g. F4, D6")->required();
    bind(qm, cmd_qm);

    auto *ident = common(app.add_subcommand("identify", "look up a unipotent class"));
    ident->add_option("--group", o.group, "e.g. E6")->required();
    ident->add_option("--table", o.table, "class table TSV (default: $UNIP_CLASS_TABLE, then the bundled table)");
    ident->add_option("--module", o.module, "adjoint, minimal or natural");
    ident->add_option("--expr", o.expr, "restriction of the module as an SL2 expression");
    ident->add_option("--jordan", o.partition, "Jordan type on the module");
    bind(ident, cmd_identify);

    auto *ov = common(app.add_subcommand("oracle-verify", "compare the formulas with explicit matrices"));
    ov->add_option("expr", o.expr)->required();
    ov->add_option("--dim-cap", o.dim_cap);
    ov->add_option("--strategy", o.strategy, "dense or block")->check(CLI::IsMember({"dense", "block"}));
    ov->add_flag("--certificate", o.certificate, "print the rank certificate as JSON");
    bind(ov, cmd_oracle_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
