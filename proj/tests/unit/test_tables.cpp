#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "exls/tables.hpp"

using namespace exls;

namespace {

std::vector<std::vector<std::string>> md_cells(const std::string &md) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(md);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::size_t pos = 1;
        while (pos < line.size()) {
            std::size_t bar = line.find('|', pos);
            std::string c = line.substr(pos, bar - pos);
            c.erase(0, c.find_first_not_of(' '));
            c.erase(c.find_last_not_of(' ') + 1);
            cells.push_back(c);
            pos = bar + 1;
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("markdown and json renderings agree") {
    for (const char *name : {"iota", "Psi"}) {
        TextTable t = make_table(name);
        auto md = md_cells(render_markdown(t));
        auto js = nlohmann::json::parse(render_json(t));
        REQUIRE(md.size() == t.rows.size() + 2);
        REQUIRE(js["rows"].size() == t.rows.size());
        CHECK(md[0] == t.header);
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t c = 0; c < t.header.size(); ++c) CHECK(js["rows"][r][t.header[c]] == md[r + 2][c]);
    }
}

TEST_CASE("table rows") {
    TextTable iota = make_table("iota");
    CHECK(iota.rows.size() == 18);
    bool seen = false;
    for (const auto &r : iota.rows)
        if (r[0] == "xi_i*xi_j*eta_k" && r[1] == "(2,3,4)") {
            seen = true;
            CHECK(r[3] == "2*xi2*xi3*eta4");
            CHECK(r[4] == "-r2*x4^2*dx1");
        }
    CHECK(seen);
    for (const auto &r : iota.rows)
        if (r[0] == "xi_i*eta_j*eta_k") CHECK(r[3] == "0");
    CHECK_THROWS_AS(make_table("Phi"), std::invalid_argument);
}
