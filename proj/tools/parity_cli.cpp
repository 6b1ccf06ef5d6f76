// Batch verification front end: every module operation behind one binary.
// Exit codes: 0 = success / all checks pass, 1 = a verification failed,
// 2 = usage or parameter error.

#include "parity/abelian.hpp"
#include "parity/chart.hpp"
#include "parity/element_set.hpp"
#include "parity/group_table.hpp"
#include "parity/jp_group.hpp"
#include "parity/lattice.hpp"
#include "parity/lie.hpp"
#include "parity/odo.hpp"
#include "parity/partition.hpp"
#include "parity/report.hpp"
#include "parity/signed_perm.hpp"
#include "parity/verify.hpp"
#include "parity/z2.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace paritygroups;

namespace {

struct Options {
    std::string format = "table";
    int max_n = 4;
    std::uint64_t seed = 20260810;
    double tol = 1e-9;
    Caps caps;
    int exit_code = 0;

    VerifyOptions verify() const { return {max_n, seed, tol, caps}; }
};

void finish(const Report& r, Options& opt)
{
    std::cout << emit(r, opt.format);
    if (!r.pass())
        opt.exit_code = 1;
}

void print_json_or_lines(const json& j, const std::vector<std::string>& lines, const Options& opt)
{
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : lines)
            std::cout << line << "\n";
    }
}

json matrix_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (int i = 1; i <= m.n(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.n(); ++j)
            row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
    int n = static_cast<int>(j.size());
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        if (!j[i - 1].is_array() || static_cast<int>(j[i - 1].size()) != n)
            throw std::invalid_argument("matrix JSON must be square");
        for (int c = 1; c <= n; ++c) {
            const json& cell = j[i - 1][c - 1];
            if (cell.is_number_integer())
                m.at(i, c) = Rat(Int(cell.get<long long>()));
            else
                m.at(i, c) = rat_parse(cell.get<std::string>());
        }
    }
    return m;
}

json complex_matrix_json(const ComplexMatrix& u)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < u.cols(); ++j)
            row.push_back(json::array({u(i, j).real(), u(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("complex matrix JSON must be a nonempty array of rows");
    int n = static_cast<int>(j.size());
    ComplexMatrix u(n, n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw std::invalid_argument("complex matrix JSON must be square");
        for (int c = 0; c < n; ++c) {
            const json& cell = j[i][c];
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("complex entries are [re, im] pairs");
            u(i, c) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return u;
}

json load_json_arg(const std::string& inline_text, const std::string& path)
{
    if (!inline_text.empty())
        return json::parse(inline_text);
    if (path.empty())
        throw std::invalid_argument("provide --matrix or --input");
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

json chart_json(const Chart& c, bool spherical_out)
{
    json blocks = json::array();
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        json b;
        if (spherical_out) {
            SphericalAngles a = spherical(c, static_cast<int>(i) + 1);
            b["theta"] = json::array();
            for (const Rat& t : a.theta)
                b["theta"].push_back(rat_str(t));
            b["phi"] = rat_str(a.phi);
        } else {
            b["residues"] = json::array();
            for (const Rat& t : c.blocks[i].residues)
                b["residues"].push_back(rat_str(t));
            b["blocksum"] = rat_str(c.blocks[i].blocksum);
        }
        blocks.push_back(b);
    }
    return blocks;
}

/// Accepts "τ:[..];π:[..];ε:[..]" or "π:[..];ε:[..]" (tau derived from the
/// axis map and the partition blocks).
BasedAutomorphism parse_automorphism(const PartitionSpec& J, const std::string& text)
{
    std::string rest = text;
    std::vector<int> tau;
    const std::string tau_prefix = "τ:[";
    if (rest.compare(0, tau_prefix.size(), tau_prefix) == 0) {
        std::size_t close = rest.find(']');
        std::string body = rest.substr(tau_prefix.size(), close - tau_prefix.size());
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ','))
            tau.push_back(std::stoi(tok));
        rest = rest.substr(close + 2); // skip "];"
    }
    SignedPermutation axis_map = decode_signed_permutation(rest);
    if (axis_map.degree() != J.n())
        throw std::invalid_argument("axis map degree does not match partition");
    if (tau.empty()) {
        tau.resize(J.m());
        for (int i = 1; i <= J.m(); ++i)
            tau[i - 1] = J.block_of_axis(axis_map.image(J.block(i).front()));
    }
    for (int i = 1; i <= J.m(); ++i)
        for (int axis : J.block(i))
            if (J.block_of_axis(axis_map.image(axis)) != tau[i - 1])
                throw std::invalid_argument("axis map does not respect the partition blocks");
    return BasedAutomorphism{tau, axis_map};
}

GroupTable table_from_descriptor(const std::string& desc, const Options& opt, std::string& label)
{
    auto colon = desc.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group descriptor must look like P:3, CP:2, kernel:3:1, "
                                    "JP:2,1, rot:2,1 or full:3");
    std::string kind = desc.substr(0, colon);
    std::string arg = desc.substr(colon + 1);
    label = desc;
    if (kind == "P")
        return group_table_from(enumerate_pn(std::stoi(arg), opt.caps));
    if (kind == "AP" || kind == "BP" || kind == "CP") {
        SubgroupKind sk = kind == "AP" ? SubgroupKind::AP
                          : kind == "BP" ? SubgroupKind::BP
                                         : SubgroupKind::CP;
        return group_table_from(standard_subgroup(sk, std::stoi(arg), opt.caps));
    }
    if (kind == "kernel") {
        auto second = arg.find(':');
        if (second == std::string::npos)
            throw std::invalid_argument("kernel descriptor is kernel:<n>:<parity 1|2|3>");
        int n = std::stoi(arg.substr(0, second));
        int p = std::stoi(arg.substr(second + 1));
        return group_table_from(kernel(n, parity_kind_from_int(p), opt.caps));
    }
    if (kind == "JP") {
        PartitionSpec J = PartitionSpec::parse(arg);
        auto elems = jp_enumerate(J, opt.caps);
        std::unordered_map<std::string, int> index;
        for (std::size_t i = 0; i < elems.size(); ++i)
            index.emplace(jp_key(elems[i]), static_cast<int>(i));
        return GroupTable::build(elems.size(), [&, J](int a, int b) {
            return index.at(jp_key(jp_compose(J, elems[a], elems[b])));
        });
    }
    if (kind == "rot" || kind == "full") {
        QuotientComplex cx = kind == "rot" ? build_complex(PartitionSpec::parse(arg))
                                           : build_full_quotient(std::stoi(arg));
        auto rot = rotation_group(cx, opt.caps);
        return GroupTable::build(rot.size(), [rot](int a, int b) {
            auto prod = compose(rot[a], rot[b]);
            auto it = std::lower_bound(rot.begin(), rot.end(), prod);
            return static_cast<int>(it - rot.begin());
        });
    }
    throw std::invalid_argument("unknown group descriptor kind \"" + kind + "\"");
}

int run(int argc, char** argv)
{
    CLI::App app{"parity group verification toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--max-n", opt.max_n, "exhaustive sweep bound for verify (default 4)")
        ->check(CLI::Range(1, 5));
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--tol", opt.tol, "unitary reconstruction tolerance (default 1e-9)");
    app.add_option("--closure-cap", opt.caps.closure_limit, "closure element cap (default 1e7)");
    app.add_option("--jp-cap", opt.caps.jp_limit, "JP enumeration cap (default 1e6)");
    app.add_option("--candidate-cap", opt.caps.candidate_limit,
                   "automorphism candidate cap (default 1e6)");
    app.add_option("--iso-cap", opt.caps.iso_limit, "isomorphism search cap (default 5000)");
    app.add_option("--enum-degree", opt.caps.enumeration_degree,
                   "max degree for P_n enumeration (default 8)");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run acceptance criteria");
    std::string which = "all";
    {
        std::vector<std::string> names{"all"};
        for (const auto& c : criteria())
            names.push_back(c.slug);
        verify->add_option("criterion", which, "criterion slug or 'all'")
            ->check(CLI::IsMember(names));
    }
    verify->callback([&] {
        std::vector<Report> reports;
        if (which == "all") {
            reports = run_all_criteria(opt.verify());
        } else {
            for (const auto& c : criteria())
                if (c.slug == which)
                    reports.push_back(run_criterion(c.id, opt.verify()));
        }
        bool all_pass = true;
        if (opt.format == "json") {
            json arr = json::array();
            for (const auto& r : reports) {
                arr.push_back(emit_json(r));
                all_pass = all_pass && r.pass();
            }
            std::cout << json{{"reports", arr}, {"pass", all_pass}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const auto& r = reports[i];
                all_pass = all_pass && r.pass();
                const auto& c = which == "all" ? criteria()[i]
                                               : *std::find_if(criteria().begin(), criteria().end(),
                                                               [&](const Criterion& k) {
                                                                   return k.slug == which;
                                                               });
                std::cout << (r.pass() ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.slug
                          << "): " << c.title << "\n";
                if (!r.pass())
                    std::cout << emit_table(r);
            }
            std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        }
        if (!all_pass)
            opt.exit_code = 1;
    });

    // ---- group -----------------------------------------------------------
    auto* group = app.add_subcommand("group", "finite signed-permutation groups");
    group->require_subcommand(1);
    std::string g_kind = "P", g_text, h_text, desc_a, desc_b, emb_kind = "CP2";
    int g_n = 2, g_parity = 3;
    std::vector<std::string> gen_texts;

    auto* g_order = group->add_subcommand("order", "order of P/AP/BP/CP");
    g_order->add_option("--kind", g_kind)->check(CLI::IsMember({"P", "AP", "BP", "CP"}));
    g_order->add_option("--n", g_n)->required();
    g_order->callback([&] {
        ElementSet s = g_kind == "P" ? enumerate_pn(g_n, opt.caps)
                       : g_kind == "AP" ? standard_subgroup(SubgroupKind::AP, g_n, opt.caps)
                       : g_kind == "BP" ? standard_subgroup(SubgroupKind::BP, g_n, opt.caps)
                                        : standard_subgroup(SubgroupKind::CP, g_n, opt.caps);
        print_json_or_lines(json{{"order", s.size()}},
                            {"order " + std::to_string(s.size())}, opt);
    });

    auto* g_elements = group->add_subcommand("elements", "list group elements");
    g_elements->add_option("--kind", g_kind)->check(CLI::IsMember({"P", "AP", "BP", "CP"}));
    g_elements->add_option("--n", g_n)->required();
    g_elements->callback([&] {
        ElementSet s = g_kind == "P" ? enumerate_pn(g_n, opt.caps)
                       : g_kind == "AP" ? standard_subgroup(SubgroupKind::AP, g_n, opt.caps)
                       : g_kind == "BP" ? standard_subgroup(SubgroupKind::BP, g_n, opt.caps)
                                        : standard_subgroup(SubgroupKind::CP, g_n, opt.caps);
        json arr = json::array();
        std::vector<std::string> lines;
        for (const auto& e : s) {
            arr.push_back(encode(e));
            lines.push_back(encode(e));
        }
        print_json_or_lines(arr, lines, opt);
    });

    auto* g_kernel = group->add_subcommand("kernel", "kernel of a parity homomorphism");
    g_kernel->add_option("--n", g_n)->required();
    g_kernel->add_option("--parity", g_parity)->check(CLI::IsMember({1, 2, 3}));
    g_kernel->callback([&] {
        ElementSet s = kernel(g_n, parity_kind_from_int(g_parity), opt.caps);
        json arr = json::array();
        std::vector<std::string> lines{"order " + std::to_string(s.size())};
        for (const auto& e : s)
            arr.push_back(encode(e));
        print_json_or_lines(json{{"order", s.size()}, {"elements", arr}}, lines, opt);
    });

    auto* g_compose = group->add_subcommand("compose", "compose two elements (a after b)");
    g_compose->add_option("--a", g_text)->required();
    g_compose->add_option("--b", h_text)->required();
    g_compose->callback([&] {
        auto z = compose(decode_signed_permutation(g_text), decode_signed_permutation(h_text));
        print_json_or_lines(json{{"result", encode(z)}}, {encode(z)}, opt);
    });

    auto* g_inverse = group->add_subcommand("inverse", "invert an element");
    g_inverse->add_option("--g", g_text)->required();
    g_inverse->callback([&] {
        auto z = inverse(decode_signed_permutation(g_text));
        print_json_or_lines(json{{"result", encode(z)}}, {encode(z)}, opt);
    });

    auto* g_parity_cmd = group->add_subcommand("parity", "parity of an element");
    g_parity_cmd->add_option("--g", g_text)->required();
    g_parity_cmd->add_option("--parity", g_parity)->check(CLI::IsMember({1, 2, 3}));
    g_parity_cmd->callback([&] {
        int v = parity(decode_signed_permutation(g_text), parity_kind_from_int(g_parity));
        print_json_or_lines(json{{"parity", v}}, {std::to_string(v)}, opt);
    });

    auto* g_matrix = group->add_subcommand("matrix", "matrix image of an element");
    g_matrix->add_option("--g", g_text)->required();
    g_matrix->callback([&] {
        SignedMatrix m = to_matrix(decode_signed_permutation(g_text));
        json rows = json::array();
        std::vector<std::string> lines;
        for (int i = 1; i <= m.n; ++i) {
            json row = json::array();
            std::string line;
            for (int j = 1; j <= m.n; ++j) {
                row.push_back(m.at(i, j));
                line += (j > 1 ? " " : "") + std::to_string(m.at(i, j));
            }
            rows.push_back(row);
            lines.push_back(line);
        }
        print_json_or_lines(rows, lines, opt);
    });

    auto* g_decompose = group->add_subcommand("decompose", "z = x y factorization");
    g_decompose->add_option("--g", g_text)->required();
    g_decompose->callback([&] {
        auto [x, y] = decompose(decode_signed_permutation(g_text));
        print_json_or_lines(json{{"x", encode(x)}, {"y", encode(y)}},
                            {"x " + encode(x), "y " + encode(y)}, opt);
    });

    auto* g_closure = group->add_subcommand("closure", "closure of generators");
    g_closure->add_option("--gen", gen_texts, "element encoding (repeatable)")->required();
    g_closure->callback([&] {
        std::vector<SignedPermutation> gens;
        for (const auto& t : gen_texts)
            gens.push_back(decode_signed_permutation(t));
        ElementSet s = closure(gens, opt.caps);
        json arr = json::array();
        std::vector<std::string> lines{"order " + std::to_string(s.size())};
        for (const auto& e : s)
            arr.push_back(encode(e));
        print_json_or_lines(json{{"order", s.size()}, {"elements", arr}}, lines, opt);
    });

    auto* g_embedded = group->add_subcommand("embedded", "embedded small-group generators");
    g_embedded->add_option("--kind", emb_kind)->check(CLI::IsMember({"AP3", "BP2", "CP2"}));
    g_embedded->add_option("--n", g_n)->required();
    g_embedded->callback([&] {
        EmbeddedKind k = emb_kind == "AP3" ? EmbeddedKind::AP3
                         : emb_kind == "BP2" ? EmbeddedKind::BP2
                                             : EmbeddedKind::CP2;
        auto gens = embedded_generators(k, g_n);
        json arr = json::array();
        std::vector<std::string> lines;
        for (const auto& e : gens) {
            arr.push_back(encode(e));
            lines.push_back(encode(e));
        }
        print_json_or_lines(arr, lines, opt);
    });

    auto* g_z2 = group->add_subcommand("z2check", "pair-vector span of AZ_2^n");
    g_z2->add_option("--n", g_n)->required();
    g_z2->callback([&] {
        Z2SpanReport z = z2_pair_span_check(g_n);
        Report r;
        r.command = "group z2check";
        r.params.emplace_back("n", std::to_string(g_n));
        r.expect_eq("even-weight subgroup order", std::uint64_t{1} << (g_n - 1),
                    z.even_subgroup_order);
        r.expect_eq("pair-vector span order", std::uint64_t{1} << (g_n - 1), z.pair_span_order);
        r.expect_true("span equals subgroup", z.spans_match);
        finish(r, opt);
    });

    std::string jp_partition = "2";
    int jp_a = 0, jp_b = 0;
    auto* g_jp = group->add_subcommand("jp", "enumerate JP_n for a partition");
    g_jp->add_option("--partition", jp_partition)->required();
    g_jp->callback([&] {
        PartitionSpec J = PartitionSpec::parse(jp_partition);
        auto elems = jp_enumerate(J, opt.caps);
        json arr = json::array();
        std::vector<std::string> lines{"order " + std::to_string(elems.size()),
                                       "note: tau restricted to size-preserving block permutations"};
        for (std::size_t i = 0; i < elems.size(); ++i) {
            arr.push_back(jp_encode(elems[i]));
            lines.push_back(std::to_string(i) + "  " + jp_encode(elems[i]));
        }
        print_json_or_lines(json{{"order", elems.size()},
                                 {"note", "tau restricted to size-preserving block permutations"},
                                 {"elements", arr}},
                            lines, opt);
    });

    auto* g_jpc = group->add_subcommand("jp-compose", "compose two JP elements by index");
    g_jpc->add_option("--partition", jp_partition)->required();
    g_jpc->add_option("--a", jp_a)->required();
    g_jpc->add_option("--b", jp_b)->required();
    g_jpc->callback([&] {
        PartitionSpec J = PartitionSpec::parse(jp_partition);
        auto elems = jp_enumerate(J, opt.caps);
        if (jp_a < 0 || jp_b < 0 || jp_a >= static_cast<int>(elems.size())
            || jp_b >= static_cast<int>(elems.size()))
            throw std::invalid_argument("JP element index out of range");
        auto z = jp_compose(J, elems[jp_a], elems[jp_b]);
        print_json_or_lines(json{{"result", jp_encode(z)}}, {jp_encode(z)}, opt);
    });

    auto* g_jpi = group->add_subcommand("jp-inverse", "invert a JP element by index");
    g_jpi->add_option("--partition", jp_partition)->required();
    g_jpi->add_option("--a", jp_a)->required();
    g_jpi->callback([&] {
        PartitionSpec J = PartitionSpec::parse(jp_partition);
        auto elems = jp_enumerate(J, opt.caps);
        if (jp_a < 0 || jp_a >= static_cast<int>(elems.size()))
            throw std::invalid_argument("JP element index out of range");
        auto z = jp_inverse(J, elems[jp_a]);
        print_json_or_lines(json{{"result", jp_encode(z)}}, {jp_encode(z)}, opt);
    });

    auto* g_iso = group->add_subcommand("iso", "isomorphism search between two groups");
    g_iso->add_option("--a", desc_a, "descriptor: P:n, AP:n, BP:n, CP:n, kernel:n:k, JP:J, rot:J, full:n")
        ->required();
    g_iso->add_option("--b", desc_b)->required();
    g_iso->callback([&] {
        std::string la, lb;
        GroupTable ta = table_from_descriptor(desc_a, opt, la);
        GroupTable tb = table_from_descriptor(desc_b, opt, lb);
        auto map = isomorphic(ta, tb, opt.caps);
        json j{{"a", la}, {"b", lb}, {"isomorphic", map.has_value()}};
        std::vector<std::string> lines{std::string("isomorphic: ") + (map ? "yes" : "no")};
        if (map) {
            j["mapping"] = *map;
            lines.push_back("mapping of " + std::to_string(map->size()) + " elements found");
        }
        print_json_or_lines(j, lines, opt);
    });

    // ---- quotient ---------------------------------------------------------
    auto* quotient = app.add_subcommand("quotient", "Z^n parity and quotients");
    quotient->require_subcommand(1);
    std::string q_x, q_which = "A", q_partition;

    auto* q_parity = quotient->add_subcommand("parity", "sum of entries mod 2");
    q_parity->add_option("--x", q_x)->required();
    q_parity->callback([&] {
        int v = int_parity(integer_vector_parse(q_x));
        print_json_or_lines(json{{"parity", v}}, {std::to_string(v)}, opt);
    });

    auto* q_member = quotient->add_subcommand("member", "membership in AZ^n, BZ^n or JZ^n");
    q_member->add_option("--x", q_x)->required();
    q_member->add_option("--which", q_which)->check(CLI::IsMember({"A", "B", "J"}));
    q_member->add_option("--partition", q_partition);
    q_member->callback([&] {
        IntegerVector x = integer_vector_parse(q_x);
        bool v = q_which == "A" ? member_A(x)
                 : q_which == "B" ? member_B(x)
                                  : member_J(x, PartitionSpec::parse(q_partition));
        print_json_or_lines(json{{"member", v}}, {v ? "true" : "false"}, opt);
    });

    auto* q_node = quotient->add_subcommand("node", "projection to Z^n / JZ^n");
    q_node->add_option("--x", q_x)->required();
    q_node->add_option("--partition", q_partition)->required();
    q_node->callback([&] {
        Z2Vector v = project_node(integer_vector_parse(q_x), PartitionSpec::parse(q_partition));
        print_json_or_lines(json{{"node", v.str()}}, {v.str()}, opt);
    });

    auto* q_table = quotient->add_subcommand("table", "quotient group Z_2^m");
    q_table->add_option("--partition", q_partition)->required();
    q_table->callback([&] {
        QuotientGroupInfo info = quotient_table(PartitionSpec::parse(q_partition));
        json j{{"m", info.m}, {"order", info.order}, {"all_self_inverse", info.all_self_inverse}};
        std::vector<std::string> lines{"order " + std::to_string(info.order)};
        if (info.table)
            j["table"] = *info.table;
        else {
            j["generators"] = info.generator_note;
            lines.push_back(info.generator_note);
        }
        print_json_or_lines(j, lines, opt);
    });

    // ---- chart -------------------------------------------------------------
    auto* chart_cmd = app.add_subcommand("chart", "exact sphere-coordinate charts");
    chart_cmd->require_subcommand(1);
    std::string c_x, c_y, c_partition;
    bool c_spherical = false;

    auto* c_eval = chart_cmd->add_subcommand("eval", "chart of a rational vector");
    c_eval->add_option("--x", c_x)->required();
    c_eval->add_option("--partition", c_partition)->required();
    c_eval->add_flag("--spherical", c_spherical, "emit angles as multiples of pi");
    c_eval->callback([&] {
        PartitionSpec J = PartitionSpec::parse(c_partition);
        Chart c = chart(rational_vector_parse(c_x), J);
        json j = chart_json(c, c_spherical);
        std::vector<std::string> lines;
        for (std::size_t i = 0; i < c.blocks.size(); ++i) {
            std::string line = "block " + std::to_string(i + 1) + ": ";
            if (c_spherical) {
                SphericalAngles a = spherical(c, static_cast<int>(i) + 1);
                line += "theta = (";
                for (std::size_t k = 0; k < a.theta.size(); ++k)
                    line += (k ? "," : "") + rat_str(a.theta[k]) + "*pi";
                line += "), phi = " + rat_str(a.phi) + "*pi";
            } else {
                line += "residues = (";
                for (std::size_t k = 0; k < c.blocks[i].residues.size(); ++k)
                    line += (k ? "," : "") + rat_str(c.blocks[i].residues[k]);
                line += "), blocksum = " + rat_str(c.blocks[i].blocksum);
            }
            lines.push_back(line);
        }
        print_json_or_lines(j, lines, opt);
    });

    auto* c_equiv = chart_cmd->add_subcommand("equiv", "chart equality of two vectors");
    c_equiv->add_option("--x", c_x)->required();
    c_equiv->add_option("--y", c_y)->required();
    c_equiv->add_option("--partition", c_partition)->required();
    c_equiv->callback([&] {
        PartitionSpec J = PartitionSpec::parse(c_partition);
        bool v = chart_equiv(rational_vector_parse(c_x), rational_vector_parse(c_y), J);
        print_json_or_lines(json{{"equivalent", v}}, {v ? "true" : "false"}, opt);
    });

    // ---- lattice ------------------------------------------------------------
    auto* lattice = app.add_subcommand("lattice", "quotient-lattice complexes and rotations");
    lattice->require_subcommand(1);
    std::string l_partition = "2", l_auto, l_node, l_circle;
    int l_n = 2, l_index = 0;

    auto* l_complex = lattice->add_subcommand("complex", "build L^n/JZ^n and export JSON");
    l_complex->add_option("--partition", l_partition)->required();
    l_complex->callback([&] {
        QuotientComplex cx = build_complex(PartitionSpec::parse(l_partition));
        json nodes = json::array(), circles = json::array(), incidence = json::array();
        for (std::uint32_t v : cx.nodes) {
            Z2Vector z{cx.m(), v};
            nodes.push_back(z.str());
        }
        for (std::size_t i = 0; i < cx.circles.size(); ++i) {
            const auto& c = cx.circles[i];
            circles.push_back({{"block", c.block}, {"axis", c.axis}, {"other_bits", c.other_bits}});
            auto [lo, hi] = cx.circle_nodes(c);
            incidence.push_back({{"circle", i}, {"nodes", json::array({lo, hi})}});
        }
        json j{{"partition", cx.J.text()},
               {"kind", cx.kind == CircleKind::Circle2 ? "circle2" : "projline"},
               {"multipliers", cx.admissible_multipliers()},
               {"nodes", nodes},
               {"circles", circles},
               {"incidence", incidence}};
        std::vector<std::string> lines{"nodes " + std::to_string(cx.nodes.size()),
                                       "circles " + std::to_string(cx.circles.size())};
        print_json_or_lines(j, lines, opt);
    });

    auto* l_cand = lattice->add_subcommand("candidates", "candidate automorphism count");
    l_cand->add_option("--partition", l_partition)->required();
    l_cand->callback([&] {
        QuotientComplex cx = build_complex(PartitionSpec::parse(l_partition));
        auto cands = candidate_automorphisms(cx, opt.caps);
        print_json_or_lines(json{{"count", cands.size()}},
                            {"count " + std::to_string(cands.size())}, opt);
    });

    auto* l_rot = lattice->add_subcommand("rotations", "discrete rotation group");
    l_rot->add_option("--partition", l_partition)->required();
    l_rot->callback([&] {
        QuotientComplex cx = build_complex(PartitionSpec::parse(l_partition));
        auto rot = rotation_group(cx, opt.caps);
        json arr = json::array();
        std::vector<std::string> lines{"order " + std::to_string(rot.size())};
        for (const auto& a : rot) {
            arr.push_back(encode(a));
            lines.push_back(encode(a));
        }
        print_json_or_lines(json{{"order", rot.size()}, {"elements", arr}}, lines, opt);
    });

    auto* l_check = lattice->add_subcommand("check", "rotation predicate for one automorphism");
    l_check->add_option("--partition", l_partition)->required();
    l_check->add_option("--a", l_auto, "automorphism encoding")->required();
    l_check->callback([&] {
        PartitionSpec J = PartitionSpec::parse(l_partition);
        QuotientComplex cx = build_complex(J);
        bool v = is_rotation(parse_automorphism(J, l_auto), cx);
        print_json_or_lines(json{{"rotation", v}}, {v ? "true" : "false"}, opt);
    });

    auto* l_action = lattice->add_subcommand("action", "automorphism induced by a JP element");
    l_action->add_option("--partition", l_partition)->required();
    l_action->add_option("--index", l_index, "JP element index")->required();
    l_action->callback([&] {
        PartitionSpec J = PartitionSpec::parse(l_partition);
        auto elems = jp_enumerate(J, opt.caps);
        if (l_index < 0 || l_index >= static_cast<int>(elems.size()))
            throw std::invalid_argument("JP element index out of range");
        BasedAutomorphism a = jp_action(J, elems[l_index]);
        print_json_or_lines(json{{"element", jp_encode(elems[l_index])}, {"automorphism", encode(a)}},
                            {encode(a)}, opt);
    });

    auto* l_apply = lattice->add_subcommand("apply", "apply an automorphism to a node or circle");
    l_apply->add_option("--partition", l_partition)->required();
    l_apply->add_option("--a", l_auto)->required();
    l_apply->add_option("--node", l_node, "node bits, e.g. 1,0");
    l_apply->add_option("--circle", l_circle, "circle as block,axis,other_bits");
    l_apply->callback([&] {
        PartitionSpec J = PartitionSpec::parse(l_partition);
        QuotientComplex cx = build_complex(J);
        BasedAutomorphism a = parse_automorphism(J, l_auto);
        if (!l_node.empty()) {
            std::vector<int> bits;
            std::istringstream in(l_node);
            std::string tok;
            while (std::getline(in, tok, ','))
                bits.push_back(std::stoi(tok));
            Z2Vector v = z2_from_list(bits);
            if (v.n != J.m())
                throw std::invalid_argument("node length must be m");
            Z2Vector img{J.m(), apply_node(a, cx, v.bits)};
            print_json_or_lines(json{{"node", img.str()}}, {img.str()}, opt);
        } else if (!l_circle.empty()) {
            std::istringstream in(l_circle);
            std::string tok;
            std::vector<int> parts;
            while (std::getline(in, tok, ','))
                parts.push_back(std::stoi(tok));
            if (parts.size() != 3)
                throw std::invalid_argument("circle is block,axis,other_bits");
            LatticeCircle c{parts[0], parts[1], static_cast<std::uint32_t>(parts[2])};
            LatticeCircle img = apply_circle(a, cx, c);
            json j{{"block", img.block}, {"axis", img.axis}, {"other_bits", img.other_bits}};
            print_json_or_lines(j,
                                {"block " + std::to_string(img.block) + " axis "
                                 + std::to_string(img.axis) + " other_bits "
                                 + std::to_string(img.other_bits)},
                                opt);
        } else {
            throw std::invalid_argument("provide --node or --circle");
        }
    });

    auto* l_prop1 = lattice->add_subcommand("prop1", "verify Proposition 1 for a partition");
    l_prop1->add_option("--partition", l_partition)->required();
    l_prop1->callback([&] {
        Prop1Report rep = verify_prop1(PartitionSpec::parse(l_partition), opt.caps);
        Report r;
        r.command = "lattice prop1";
        r.params.emplace_back("partition", rep.partition.text());
        r.params.emplace_back("jp_order", std::to_string(rep.jp_order));
        r.params.emplace_back("kernel_order", std::to_string(rep.kernel_order));
        r.params.emplace_back("image_order", std::to_string(rep.image_order));
        r.params.emplace_back("rotation_order", std::to_string(rep.rotation_order));
        r.params.emplace_back("note", rep.note);
        r.expect_eq("image_order x kernel_order", rep.jp_order,
                    rep.image_order * rep.kernel_order);
        r.expect_true("action image equals predicate rotations", rep.predicate_equals_image);
        r.expect_true("JP/kernel isomorphic to rotation group", rep.iso_check);
        finish(r, opt);
    });

    auto* l_full = lattice->add_subcommand("full", "automorphisms of L^n/Z^n");
    l_full->add_option("--n", l_n)->required();
    l_full->callback([&] {
        FullQuotientReport rep = full_quotient_automorphisms(l_n, opt.caps);
        Report r;
        r.command = "lattice full";
        r.params.emplace_back("n", std::to_string(l_n));
        std::uint64_t expected = std::uint64_t{1} << l_n;
        for (int f = 2; f <= l_n; ++f)
            expected *= static_cast<std::uint64_t>(f);
        r.expect_eq("order 2^n n!", expected, rep.order);
        if (rep.iso_checked)
            r.expect_true("isomorphic to P_n", rep.isomorphic_to_pn);
        finish(r, opt);
    });

    // ---- lie ---------------------------------------------------------------
    auto* lie = app.add_subcommand("lie", "2x2 algebras and Lie bracket closure");
    lie->require_subcommand(1);
    std::string lie_partition = "2", lie_kind = "C", lie_a, lie_b, lie_matrix, lie_input;
    bool lie_minimal = false;
    int lie_j = 1, lie_k = 2, lie_n = 2;

    auto parse_two = [&](const std::string& text, AlgebraKind kind) {
        auto comma = text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("algebra element is x,y");
        return TwoByTwo{kind, rat_parse(text.substr(0, comma)), rat_parse(text.substr(comma + 1))};
    };

    auto* lie_mul = lie->add_subcommand("alg-mul", "algebra product");
    lie_mul->add_option("--kind", lie_kind)->check(CLI::IsMember({"A", "B", "C"}));
    lie_mul->add_option("--a", lie_a)->required();
    lie_mul->add_option("--b", lie_b)->required();
    lie_mul->callback([&] {
        AlgebraKind k = algebra_kind_parse(lie_kind);
        TwoByTwo r = algebra_mul(parse_two(lie_a, k), parse_two(lie_b, k));
        print_json_or_lines(json{{"x", rat_str(r.x)}, {"y", rat_str(r.y)}},
                            {rat_str(r.x) + "," + rat_str(r.y)}, opt);
    });

    auto* lie_add = lie->add_subcommand("alg-add", "algebra sum");
    lie_add->add_option("--kind", lie_kind)->check(CLI::IsMember({"A", "B", "C"}));
    lie_add->add_option("--a", lie_a)->required();
    lie_add->add_option("--b", lie_b)->required();
    lie_add->callback([&] {
        AlgebraKind k = algebra_kind_parse(lie_kind);
        TwoByTwo r = algebra_add(parse_two(lie_a, k), parse_two(lie_b, k));
        print_json_or_lines(json{{"x", rat_str(r.x)}, {"y", rat_str(r.y)}},
                            {rat_str(r.x) + "," + rat_str(r.y)}, opt);
    });

    auto* lie_det = lie->add_subcommand("alg-det", "algebra determinant");
    lie_det->add_option("--kind", lie_kind)->check(CLI::IsMember({"A", "B", "C"}));
    lie_det->add_option("--a", lie_a)->required();
    lie_det->callback([&] {
        AlgebraKind k = algebra_kind_parse(lie_kind);
        Rat d = algebra_det(parse_two(lie_a, k));
        print_json_or_lines(json{{"det", rat_str(d)}}, {rat_str(d)}, opt);
    });

    auto* lie_member = lie->add_subcommand("kernel-member", "det = 1 kernel membership");
    lie_member->add_option("--kind", lie_kind)->check(CLI::IsMember({"B", "C"}));
    lie_member->add_option("--a", lie_a)->required();
    lie_member->callback([&] {
        AlgebraKind k = algebra_kind_parse(lie_kind);
        bool v = det_kernel_member(parse_two(lie_a, k));
        print_json_or_lines(json{{"member", v}}, {v ? "true" : "false"}, opt);
    });

    auto add_generator_cmd = [&](const char* name, const char* help, bool hyperbolic) {
        auto* cmd = lie->add_subcommand(name, help);
        cmd->add_option("--j", lie_j)->required();
        cmd->add_option("--k", lie_k)->required();
        cmd->add_option("--n", lie_n)->required();
        cmd->callback([&, hyperbolic] {
            RationalMatrix m = hyperbolic ? so11_generator(lie_j, lie_k, lie_n)
                                          : so2_generator(lie_j, lie_k, lie_n);
            print_json_or_lines(matrix_json(m), {matrix_str(m)}, opt);
        });
    };
    add_generator_cmd("so2", "rotation generator E_jk - E_kj", false);
    add_generator_cmd("so11", "hyperbolic generator E_jk + E_kj", true);

    auto* lie_p = lie->add_subcommand("p", "generator count formula");
    lie_p->add_option("--partition", lie_partition)->required();
    lie_p->callback([&] {
        long p = p_formula(PartitionSpec::parse(lie_partition));
        print_json_or_lines(json{{"p", p}}, {std::to_string(p)}, opt);
    });

    auto* lie_gens = lie->add_subcommand("generators", "generator set for a partition");
    lie_gens->add_option("--partition", lie_partition)->required();
    lie_gens->add_flag("--minimal", lie_minimal);
    lie_gens->callback([&] {
        auto gens = generator_set(PartitionSpec::parse(lie_partition), lie_minimal);
        json arr = json::array();
        std::vector<std::string> lines{"count " + std::to_string(gens.size())};
        for (const auto& g : gens) {
            arr.push_back(matrix_json(g));
            lines.push_back(matrix_str(g));
        }
        print_json_or_lines(arr, lines, opt);
    });

    auto* lie_closure = lie->add_subcommand("closure", "bracket closure of the generator set");
    lie_closure->add_option("--partition", lie_partition)->required();
    lie_closure->add_flag("--minimal", lie_minimal);
    lie_closure->callback([&] {
        LieBasis b =
            bracket_closure(generator_set(PartitionSpec::parse(lie_partition), lie_minimal), opt.caps);
        json arr = json::array();
        std::vector<std::string> lines{"dimension " + std::to_string(b.dimension())};
        for (const auto& g : b.basis()) {
            arr.push_back(matrix_json(g));
            lines.push_back(matrix_str(g));
        }
        print_json_or_lines(json{{"dimension", b.dimension()}, {"basis", arr}}, lines, opt);
    });

    auto* lie_report = lie->add_subcommand("report", "minimal vs full closure comparison");
    lie_report->add_option("--partition", lie_partition)->required();
    lie_report->callback([&] {
        ClosureReport rep = closure_report(PartitionSpec::parse(lie_partition), opt.caps);
        Report r;
        r.command = "lie report";
        r.params.emplace_back("partition", lie_partition);
        r.params.emplace_back("p", std::to_string(rep.p));
        r.params.emplace_back("dim_minimal", std::to_string(rep.dim_minimal));
        r.params.emplace_back("dim_full", std::to_string(rep.dim_full));
        r.expect_true("minimal and full generator spans equal", rep.spans_equal);
        finish(r, opt);
    });

    auto* lie_factor = lie->add_subcommand("factor", "monomial M = P * D factorization");
    lie_factor->add_option("--matrix", lie_matrix, "inline JSON matrix of \"p/q\" strings");
    lie_factor->add_option("--input", lie_input, "path to JSON matrix");
    lie_factor->callback([&] {
        RationalMatrix m = matrix_from_json(load_json_arg(lie_matrix, lie_input));
        MonomialFactors f = factor_monomial(m);
        json scales = json::array();
        std::string dstr;
        for (std::size_t i = 0; i < f.scales.size(); ++i) {
            scales.push_back(rat_str(f.scales[i]));
            dstr += (i ? "," : "") + rat_str(f.scales[i]);
        }
        print_json_or_lines(json{{"perm", encode(f.perm)}, {"scales", scales}},
                            {"P " + encode(f.perm), "D " + dstr}, opt);
    });

    // ---- unitary -------------------------------------------------------------
    auto* unitary = app.add_subcommand("unitary", "unitary O * T^n * O factorization");
    unitary->require_subcommand(1);
    int u_n = 2;
    std::string u_input;

    auto* u_random = unitary->add_subcommand("random", "seeded random unitary");
    u_random->add_option("--n", u_n)->required();
    u_random->callback([&] {
        ComplexMatrix u = random_unitary(u_n, opt.seed);
        std::ostringstream line;
        line << "unitarity residue "
             << (u.adjoint() * u - ComplexMatrix::Identity(u_n, u_n)).norm();
        print_json_or_lines(complex_matrix_json(u), {line.str()}, opt);
    });

    auto* u_decomp = unitary->add_subcommand("decompose", "O1 * diag(e^{i theta}) * O2 factors");
    u_decomp->add_option("--n", u_n, "generate a random unitary of this size");
    u_decomp->add_option("--input", u_input, "path to JSON [re,im] matrix");
    u_decomp->callback([&] {
        ComplexMatrix u;
        if (!u_input.empty()) {
            std::ifstream in(u_input);
            if (!in)
                throw std::invalid_argument("cannot open " + u_input);
            u = complex_matrix_from_json(json::parse(in));
        } else {
            u = random_unitary(u_n, opt.seed);
        }
        DecompositionResult res = odo_decompose(u, opt.tol);
        json thetas = json::array();
        std::string tline = "thetas";
        for (double t : res.thetas) {
            thetas.push_back(t);
            tline += " " + std::to_string(t);
        }
        json j{{"thetas", thetas},
               {"reconstruction_error", res.reconstruction_error},
               {"orthogonality_error", res.orthogonality_error}};
        if (opt.format == "json") {
            json o1 = json::array(), o2 = json::array();
            for (Eigen::Index i = 0; i < res.o1.rows(); ++i) {
                json r1 = json::array(), r2 = json::array();
                for (Eigen::Index c = 0; c < res.o1.cols(); ++c) {
                    r1.push_back(res.o1(i, c));
                    r2.push_back(res.o2(i, c));
                }
                o1.push_back(r1);
                o2.push_back(r2);
            }
            j["o1"] = o1;
            j["o2"] = o2;
        }
        std::ostringstream e1, e2;
        e1 << "reconstruction error " << res.reconstruction_error;
        e2 << "orthogonality error " << res.orthogonality_error;
        print_json_or_lines(j, {tline, e1.str(), e2.str()}, opt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    }
    return opt.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
}
