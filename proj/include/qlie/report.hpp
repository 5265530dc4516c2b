#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlie {

/// Named boolean check; ref identifies what the check asserts.
struct AssertionRow {
    std::string ref;
    bool pass = false;
};

/// Rectangular integer table; the only payload TSV carries.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<long long>> rows;
};

/// Machine-readable command result. TSV holds the integer tables
/// (tab-separated, LF endings, header row per table); JSON additionally
/// carries parameter echo, textual listings, assertions and the wall-clock
/// duration.
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<Table> tables;
    std::map<std::string, std::vector<std::string>> listings;
    std::vector<AssertionRow> assertions;
    long long duration_ms = 0;

    bool ok() const {
        for (const AssertionRow& a : assertions)
            if (!a.pass) return false;
        return true;
    }

    std::string to_tsv() const {
        std::string out;
        bool first = true;
        for (const Table& t : tables) {
            if (!first) out += "\n";
            first = false;
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                if (c) out += "\t";
                out += t.columns[c];
            }
            out += "\n";
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c) out += "\t";
                    out += std::to_string(row[c]);
                }
                out += "\n";
            }
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["params"] = params;
        j["tables"] = nlohmann::json::array();
        for (const Table& t : tables) {
            nlohmann::json jt;
            jt["name"] = t.name;
            jt["columns"] = t.columns;
            jt["rows"] = t.rows;
            j["tables"].push_back(jt);
        }
        j["listings"] = listings;
        j["assertions"] = nlohmann::json::array();
        for (const AssertionRow& a : assertions)
            j["assertions"].push_back({{"ref", a.ref}, {"pass", a.pass}});
        j["duration_ms"] = duration_ms;
        return j;
    }
};

}  // namespace qlie
