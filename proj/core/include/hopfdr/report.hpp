#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfdr/check.hpp"
#include "hopfdr/matrix.hpp"

namespace hopfdr {

struct Report {
    struct Item {
        std::string section;
        Check check;
    };
    struct Table {
        std::string name;
        std::vector<std::vector<std::size_t>> rows;
        bool grid = false;  // false: a single dimension sequence
    };
    using Value = std::variant<bool, std::int64_t, std::string>;

    std::string command;
    std::vector<std::string> args;
    std::vector<Item> checks;
    std::vector<std::pair<std::string, Value>> facts;
    std::vector<Table> tables;
    std::vector<std::pair<std::string, Mat>> tensors;
    double seconds = 0;

    void add(const std::string& section, const CheckList& list);
    void add(const std::string& section, Check c);
    void fact(const std::string& key, Value v);
    void table(const std::string& name, std::vector<std::size_t> row);
    void table(const std::string& name, std::vector<std::vector<std::size_t>> rows);
    void tensor(const std::string& name, Mat m);

    bool passed() const;
    // 0 when nothing failed, 1 otherwise
    int exit_code() const;
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace hopfdr
