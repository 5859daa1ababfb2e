#include "hopfdr/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace hopfdr {

using nlohmann::ordered_json;

void Report::add(const std::string& section, const CheckList& list) {
    for (const auto& c : list) checks.push_back({section, c});
}

void Report::add(const std::string& section, Check c) { checks.push_back({section, std::move(c)}); }

void Report::fact(const std::string& key, Value v) { facts.emplace_back(key, std::move(v)); }

void Report::table(const std::string& name, std::vector<std::size_t> row) { tables.push_back({name, {std::move(row)}, false}); }

void Report::table(const std::string& name, std::vector<std::vector<std::size_t>> rows) {
    tables.push_back({name, std::move(rows), true});
}

void Report::tensor(const std::string& name, Mat m) { tensors.emplace_back(name, std::move(m)); }

bool Report::passed() const {
    for (const auto& i : checks)
        if (i.check.status == Status::fail) return false;
    return true;
}

int Report::exit_code() const { return passed() ? 0 : 1; }

std::string Report::to_json() const {
    ordered_json out;
    out["command"] = command;
    out["args"] = args;
    out["passed"] = passed();
    ordered_json cj = ordered_json::array();
    for (const auto& i : checks)
        cj.push_back({{"section", i.section}, {"name", i.check.name}, {"status", status_name(i.check.status)},
                      {"detail", i.check.detail}});
    out["checks"] = cj;
    ordered_json fj = ordered_json::object();
    for (const auto& [k, v] : facts) std::visit([&](const auto& x) { fj[k] = x; }, v);
    out["facts"] = fj;
    ordered_json tj = ordered_json::object();
    for (const auto& t : tables) tj[t.name] = !t.grid ? ordered_json(t.rows[0]) : ordered_json(t.rows);
    out["tables"] = tj;
    ordered_json xj = ordered_json::object();
    for (const auto& [name, m] : tensors) {
        ordered_json entries = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& e : m.col(c))
                entries.push_back({e.row, c, e.value.numerator(), e.value.denominator()});
        xj[name] = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    }
    out["tensors"] = xj;
    out["seconds"] = seconds;
    return out.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << command;
    for (const auto& a : args) os << ' ' << a;
    os << '\n';
    for (const auto& [k, v] : facts) {
        os << "  " << k << ": ";
        std::visit(
            [&](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>)
                    os << (x ? "true" : "false");
                else
                    os << x;
            },
            v);
        os << '\n';
    }
    for (const auto& t : tables) {
        os << "  " << t.name << ":";
        if (!t.grid) {
            for (auto x : t.rows[0]) os << ' ' << x;
            os << '\n';
        } else {
            os << '\n';
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                os << "    " << std::setw(2) << r << " |";
                for (auto x : t.rows[r]) os << ' ' << std::setw(3) << x;
                os << '\n';
            }
        }
    }
    for (const auto& [name, m] : tensors) os << "  " << name << ": " << shape_of(m) << ", " << m.nnz() << " nonzero\n";
    std::string section;
    for (const auto& i : checks) {
        if (i.section != section) {
            section = i.section;
            os << "  [" << section << "]\n";
        }
        os << "    " << std::left << std::setw(8) << status_name(i.check.status) << i.check.name;
        if (!i.check.detail.empty()) os << "  (" << i.check.detail << ')';
        os << '\n';
    }
    os << (passed() ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(3) << seconds << "s\n";
    return os.str();
}

}  // namespace hopfdr
