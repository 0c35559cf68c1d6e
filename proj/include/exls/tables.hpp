#pragma once

#include <string>
#include <vector>

namespace exls {

/// One rendered table: header plus string cells.
struct TextTable {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// "iota": ι and Ψ∘ι on the |I| = 3 families for each cyclic (i,j,k), with
/// a column recording agreement with the family rule.
/// "Psi": the defining values of Ψ, including the reversed ξ_jη_i rows.
/// Throws std::invalid_argument on other names.
TextTable make_table(const std::string &name);

std::string render_markdown(const TextTable &t);
std::string render_json(const TextTable &t);

}  // namespace exls
