#include "goncarov/commands.hpp"

#include <fstream>
#include <sstream>

#include "goncarov/error.hpp"
#include "goncarov/json_io.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/parse.hpp"
#include "goncarov/partition.hpp"

namespace gonc {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

unsigned parse_unsigned(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorCode::ParseError, "expected an index, got '" + s + "'");
    return static_cast<unsigned>(v);
}

PolySequence basic_sequence(const std::string& name, unsigned n) {
    if (name == "monomials") return monomial_sequence(n);
    if (name == "falling") return falling_factorial_sequence(n);
    if (name == "zeta") return zeta_sequence(n);
    if (name == "mobius") return mobius_sequence(n);
    throw Error(ErrorCode::ParseError, "unknown basic sequence '" + name + "'");
}

Assignment merged(Assignment a, const Assignment& b) {
    for (const auto& [k, v] : b) a.insert_or_assign(k, v);
    return a;
}

MultiPoly apply_at(const MultiPoly& p, const std::optional<std::string>& at) {
    if (!at) return p;
    const auto eq = at->find('=');
    if (eq == std::string::npos || trim(at->substr(0, eq)) != "x") {
        throw Error(ErrorCode::ParseError, "--at expects x=<value>");
    }
    return poly_substitute(p, VarId::x(), parse_poly(at->substr(eq + 1)));
}

// ---- tables ---------------------------------------------------------------

struct GoldenRow {
    std::string section;
    std::string name;
    MultiPoly oracle;
    std::string printed;  // as displayed in the source tables, in parser syntax
};

std::vector<GoldenRow> golden_rows() {
    std::vector<GoldenRow> rows;
    const char* a_printed[] = {"x", "x^2 + w2*x", "x^3 + 3*w2*x^2 + w3*x", "x^4 + 6*w2*x^3 + (4*w3 + 3*w2^2)*x^2 + w4*x"};
    const char* b_printed[] = {"x", "x^2 - w2*x", "x^3 - 3*w2*x^2 + (3*w2^2 - w3)*x",
                               "x^4 - 6*w2*x^3 + (15*w2^2 - 4*w3)*x^2 + (10*w2*w3 - w4 - 15*w2^3)*x"};
    for (unsigned n = 1; n <= 4; ++n) {
        rows.push_back({"a_n", "a_" + std::to_string(n), zeta_enumerator(n), a_printed[n - 1]});
    }
    for (unsigned n = 1; n <= 4; ++n) {
        rows.push_back({"b_n", "b_" + std::to_string(n), mobius_enumerator(n), b_printed[n - 1]});
    }

    Assignment ones;
    for (unsigned i = 1; i <= 4; ++i) ones.emplace(VarId::y(i), MultiPoly(1));
    const PolySequence sp =
        family_goncarov(builtin_family("set_partitions"), Grid::numeric({1, 2, 3, 4}).negated(), 4).substituted(ones);
    const char* sp_printed[] = {"1", "x + 1", "x^2 + 5*x + 4", "x^3 + 12*x^2 + 40*x + 29",
                                "x^4 + 22*x^3 + 163*x^2 + 453*x + 311"};
    for (unsigned n = 0; n <= 4; ++n) rows.push_back({"set_partitions", "t_" + std::to_string(n), sp[n], sp_printed[n]});

    const DeckSpec tr = builtin_family("two_regular");
    const char* h_printed[] = {"y3*x", "2*y4*x", "12*y5*x", "60*y6*x + 10*y3^2*x^2"};
    for (unsigned n = 3; n <= 6; ++n) {
        rows.push_back({"two_regular", "h_" + std::to_string(n), type_enumerator(tr, n), h_printed[n - 3]});
    }
    const PolySequence t = family_goncarov(tr, Grid::symbolic(6), 6);
    const char* t_printed[] = {"y3*(x - z0)", "3*y3*(x - z0)", "12*y5*(x - z0)",
                               "10*y3^2*x^2 + 60*y6*x - 20*y3^2*z3*x - 60*y6*z0 - 10*y3^2*z0^2 + 20*y3^2*z0*z3"};
    for (unsigned n = 3; n <= 6; ++n) rows.push_back({"two_regular", "t_" + std::to_string(n), t[n], t_printed[n - 3]});
    const PolySequence neg = family_goncarov(tr, Grid::symbolic(6).negated(), 6);
    rows.push_back({"two_regular", "t_6(0;-Z)", poly_substitute(neg[6], VarId::x(), MultiPoly()),
                    "60*y6*z0 + 20*y3^2*z0*z3 - 10*y3^2*z0^2"});
    return rows;
}

} // namespace

DeckSpec family_from_json(const json& j, std::string name) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "family must be a JSON object");
    if (j.contains("name")) name = j.at("name").get<std::string>();
    if (j.contains("closed_form")) {
        DeckSpec F = builtin_family(j.at("closed_form").get<std::string>());
        F.name = name;
        return F;
    }
    if (!j.contains("d") || !j.at("d").is_object()) {
        throw Error(ErrorCode::ParseError, "family needs a \"d\" object or a \"closed_form\" tag");
    }
    std::map<unsigned, Integer> decks;
    for (const auto& [k, v] : j.at("d").items()) {
        Integer size;
        if (v.is_number_integer()) {
            size = v.get<long>();
        } else if (v.is_string()) {
            size = Integer(v.get<std::string>());
        } else {
            throw Error(ErrorCode::ParseError, "deck size must be an integer");
        }
        decks[parse_unsigned(k)] = size;
    }
    try {
        return custom_family(std::move(name), decks);
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

DeckSpec load_family(std::string_view spec) {
    if (spec.empty() || spec.front() != '@') return builtin_family(spec);
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open family file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad family file: ") + e.what());
    }
    return family_from_json(j, path);
}

Grid parse_grid(std::string_view text, unsigned length) {
    const std::string t = trim(text);
    if (t == "z") return Grid::symbolic(length);
    std::vector<MultiPoly> nodes;
    if (!t.empty() && t.front() == '[') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("bad grid list: ") + e.what());
        }
        for (const auto& node : j) {
            if (node.is_number_integer()) {
                nodes.emplace_back(node.get<long>());
            } else if (node.is_string()) {
                nodes.push_back(parse_poly(node.get<std::string>()));
            } else {
                throw Error(ErrorCode::ParseError, "grid nodes must be integers or expressions");
            }
        }
    } else {
        for (const auto& item : split_csv(t)) nodes.push_back(parse_poly(item));
    }
    return Grid(std::move(nodes));
}

std::vector<long> parse_integer_list(std::string_view text) {
    std::vector<long> out;
    for (const auto& item : split_csv(text)) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw Error(ErrorCode::ParseError, "expected an integer, got '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Assignment expand_assignments(std::string_view text, char prefix, unsigned n) {
    Assignment out;
    if (trim(text).empty()) return out;
    const unsigned first = prefix == 'w' ? 2 : 1;
    for (const auto& [key, value] : parse_assignments(text)) {
        const MultiPoly v = parse_poly(value);
        if (key == "all") {
            for (unsigned i = first; i <= std::max(n, first); ++i) {
                out.insert_or_assign(prefix == 'w' ? VarId::w(i) : VarId::y(i), v);
            }
            continue;
        }
        const std::string idx = !key.empty() && key.front() == prefix ? key.substr(1) : key;
        const unsigned i = parse_unsigned(idx);
        if (i < first) throw Error(ErrorCode::ParseError, std::string("no variable ") + prefix + std::to_string(i));
        out.insert_or_assign(prefix == 'w' ? VarId::w(i) : VarId::y(i), v);
    }
    return out;
}

ComputeKind parse_compute_kind(std::string_view name) {
    if (name == "zeta") return ComputeKind::Zeta;
    if (name == "mobius") return ComputeKind::Mobius;
    if (name == "hand") return ComputeKind::Hand;
    if (name == "type") return ComputeKind::Type;
    if (name == "goncarov") return ComputeKind::Goncarov;
    if (name == "goncarov-constant") return ComputeKind::GoncarovConstant;
    throw Error(ErrorCode::ParseError, "unknown compute kind '" + std::string(name) + "'");
}

std::string_view to_string(ComputeKind kind) {
    switch (kind) {
    case ComputeKind::Zeta: return "zeta";
    case ComputeKind::Mobius: return "mobius";
    case ComputeKind::Hand: return "hand";
    case ComputeKind::Type: return "type";
    case ComputeKind::Goncarov: return "goncarov";
    case ComputeKind::GoncarovConstant: return "goncarov-constant";
    }
    return "?";
}

MultiPoly compute_poly(const ComputeRequest& r) {
    const unsigned n = r.n;
    const Assignment subs = merged(expand_assignments(r.w, 'w', n), expand_assignments(r.y, 'y', n));
    auto need_family = [&]() {
        if (r.family.empty()) throw Error(ErrorCode::UnknownFamily, "--family is required for this kind");
        return load_family(r.family);
    };
    MultiPoly out;
    switch (r.kind) {
    case ComputeKind::Zeta: out = zeta_enumerator(n); break;
    case ComputeKind::Mobius: out = mobius_enumerator(n); break;
    case ComputeKind::Hand: out = hand_enumerator(need_family(), n); break;
    case ComputeKind::Type: out = type_enumerator(need_family(), n); break;
    case ComputeKind::Goncarov:
    case ComputeKind::GoncarovConstant: {
        if (r.kind == ComputeKind::GoncarovConstant && n == 0) {
            out = MultiPoly(1);
            break;
        }
        const PolySequence p =
            (r.family.empty() ? basic_sequence(r.basic, n) : type_sequence(need_family(), n)).substituted(subs);
        Grid grid = parse_grid(r.grid, n);
        if (r.negate_grid) grid = grid.negated();
        out = r.kind == ComputeKind::Goncarov ? goncarov_sequence(p, grid, n)[n]
                                              : goncarov_constant_ordered_partitions(p, grid, n);
        break;
    }
    }
    return apply_at(poly_substitute(out, subs), r.at);
}

json compute_json(const ComputeRequest& r) {
    return json{{"kind", std::string(to_string(r.kind))}, {"n", r.n}, {"result", poly_to_json(compute_poly(r))}};
}

TableKind parse_table_kind(std::string_view name) {
    if (name == "a030019") return TableKind::A030019;
    if (name == "paper-goldens") return TableKind::PaperGoldens;
    throw Error(ErrorCode::ParseError, "unknown table '" + std::string(name) + "'");
}

std::string table_csv(TableKind which, unsigned n_max, std::string_view section) {
    std::ostringstream os;
    if (which == TableKind::A030019) {
        // t_n(0; 1, F_1, -Z) with z_i = 1 + i; the first five values are printed in the source table.
        const long printed[] = {1, 1, 4, 29, 311};
        std::vector<long> z;
        for (unsigned i = 0; i < n_max; ++i) z.push_back(1 + static_cast<long>(i));
        const DeckSpec sp = builtin_family("set_partitions");
        Assignment ones;
        for (unsigned i = 1; i <= n_max; ++i) ones.emplace(VarId::y(i), MultiPoly(1));
        const PolySequence t = family_goncarov(sp, Grid::numeric(z).negated(), n_max).substituted(ones);
        os << "n,value,provenance\n";
        for (unsigned n = 0; n <= n_max; ++n) {
            const Rational v = poly_substitute(t[n], VarId::x(), MultiPoly()).constant_term();
            std::string provenance = "oracle-computed";
            if (n < 5) provenance = v == Rational(printed[n]) ? "paper-printed" : "oracle-computed;paper-mismatch";
            os << n << ',' << v.str() << ',' << provenance << '\n';
        }
        return os.str();
    }
    const auto rows = golden_rows();
    bool any = section.empty();
    os << "section,name,value,paper,status\n";
    for (const auto& row : rows) {
        if (!section.empty() && row.section != section) continue;
        any = true;
        const MultiPoly printed = parse_poly(row.printed);
        os << row.section << ',' << row.name << ',' << row.oracle.pretty() << ',' << printed.pretty() << ','
           << (printed == row.oracle ? "match" : "erratum-candidate") << '\n';
    }
    if (!any) throw Error(ErrorCode::ParseError, "unknown paper-goldens section '" + std::string(section) + "'");
    return os.str();
}

} // namespace gonc
