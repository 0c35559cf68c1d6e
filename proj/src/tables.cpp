#include "exls/tables.hpp"

#include <stdexcept>

#include <json.hpp>

#include "exls/embeddings.hpp"

namespace exls {

namespace {

std::string ijk_str(const std::array<int, 3> &a) {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}

}  // namespace

TextTable make_table(const std::string &name) {
    TextTable t;
    t.name = name;
    if (name == "iota") {
        t.header = {"family", "(i,j,k)", "f", "iota(f)", "Psi(iota(f))", "rule"};
        PsiMap Psi(1);
        for (const IotaRow &r : iota_rows())
            t.rows.push_back({r.family, ijk_str(r.ijk), r.f.str(), r.iota.str(), Psi(r.iota).str(),
                              r.iota == r.expected ? "ok" : "MISMATCH " + r.expected.str()});
    } else if (name == "Psi") {
        t.header = {"family", "(i,j,k)", "f", "iota(f)", "Psi(iota(f))", "note"};
        for (const PsiRow &r : psi_rows()) {
            K16Elt f = K16Elt::from_grass(0, r.f);
            t.rows.push_back({r.family, ijk_str(r.ijk), f.str(), op_iota(f).str(), r.value.str(),
                              r.extension ? "reversed order" : ""});
        }
    } else {
        throw std::invalid_argument("unknown table '" + name + "' (expected iota or Psi)");
    }
    return t;
}

std::string render_markdown(const TextTable &t) {
    auto line = [](const std::vector<std::string> &cells) {
        std::string s = "|";
        for (const auto &c : cells) s += " " + c + " |";
        return s + "\n";
    };
    std::string out = line(t.header);
    out += line(std::vector<std::string>(t.header.size(), "---"));
    for (const auto &r : t.rows) out += line(r);
    return out;
}

std::string render_json(const TextTable &t) {
    nlohmann::ordered_json j;
    j["table"] = t.name;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : t.rows) {
        nlohmann::ordered_json row;
        for (std::size_t c = 0; c < t.header.size(); ++c) row[t.header[c]] = r[c];
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

}  // namespace exls
