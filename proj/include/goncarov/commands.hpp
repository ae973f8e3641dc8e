#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "goncarov/family.hpp"
#include "goncarov/goncarov.hpp"

namespace gonc {

// Builtin name, or "@path" to a JSON file {"d": {"1": 1, ...}} or
// {"closed_form": "<builtin name>"}.
DeckSpec load_family(std::string_view spec);
DeckSpec family_from_json(const nlohmann::json& j, std::string name = "custom");

// "z" for the symbolic grid z_0..z_{length-1}; otherwise a comma-separated or
// JSON list of node expressions.
Grid parse_grid(std::string_view text, unsigned length);
std::vector<long> parse_integer_list(std::string_view text);

// "all=v" or "<i>=v" / "<prefix><i>=v" entries for the indexed family prefix
// ('y' or 'w'); "all" covers indices first..n.
Assignment expand_assignments(std::string_view text, char prefix, unsigned n);

enum class ComputeKind { Zeta, Mobius, Hand, Type, Goncarov, GoncarovConstant };
ComputeKind parse_compute_kind(std::string_view name);
std::string_view to_string(ComputeKind kind);

struct ComputeRequest {
    ComputeKind kind = ComputeKind::Zeta;
    unsigned n = 2;
    std::string family;              // empty: use `basic`
    std::string basic = "monomials"; // monomials | falling | zeta | mobius
    std::string grid = "z";
    bool negate_grid = false;
    std::string y;
    std::string w;
    std::optional<std::string> at;   // "x=<expr>"
};

MultiPoly compute_poly(const ComputeRequest& request);
// {"kind": ..., "n": ..., "result": <poly>}
nlohmann::json compute_json(const ComputeRequest& request);

enum class TableKind { A030019, PaperGoldens };
TableKind parse_table_kind(std::string_view name);

// CSV text with a header row. `section` filters paper-goldens ("" = all).
std::string table_csv(TableKind which, unsigned n_max, std::string_view section = {});

} // namespace gonc
