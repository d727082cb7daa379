#include "table.hpp"

#include <algorithm>

#include <json.hpp>

namespace sumsq::cli {

std::string cell_text(const Cell& c)
{
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (const auto* b = std::get_if<bool>(&c)) {
        return *b ? "yes" : "no";
    }
    return std::get<std::string>(c);
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

void write_table(std::ostream& out, const Table& t, Format f)
{
    switch (f) {
    case Format::csv: {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << (i ? "," : "") << csv_escape(t.columns[i]);
        }
        out << "\r\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_escape(cell_text(row[i]));
            }
            out << "\r\n";
        }
        return;
    }
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
            }
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    case Format::text: {
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            width[i] = t.columns[i].size();
        }
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                width[i] = std::max(width[i], cell_text(row[i]).size());
            }
        }
        const auto line = [&](const auto& get) {
            std::string s;
            for (std::size_t i = 0; i < width.size(); ++i) {
                std::string v = get(i);
                if (i + 1 < width.size()) {
                    v.resize(width[i], ' ');
                    v += "  ";
                }
                s += v;
            }
            out << s << '\n';
        };
        line([&](std::size_t i) { return t.columns[i]; });
        for (const auto& row : t.rows) {
            line([&](std::size_t i) { return cell_text(row[i]); });
        }
        return;
    }
    }
}

} // namespace sumsq::cli
