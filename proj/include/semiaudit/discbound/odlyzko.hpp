#ifndef SEMIAUDIT_DISCBOUND_ODLYZKO_HPP
#define SEMIAUDIT_DISCBOUND_ODLYZKO_HPP

#include "semiaudit/exactnum/radical.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiaudit {

// GRH lower bounds: any field of degree >= degree has root discriminant > bound
struct OdlyzkoRow {
    long degree;
    Rat bound;
};

class OdlyzkoTable {
public:
    OdlyzkoTable() = default;
    explicit OdlyzkoTable(std::vector<OdlyzkoRow> rows) : rows_(std::move(rows)) { validate(); }

    // the five rows quoted by the source argument
    static OdlyzkoTable defaults()
    {
        return OdlyzkoTable({{126, make_rat(20221, 1000)},
                             {216, make_rat(23089, 1000)},
                             {280, make_rat(24258, 1000)},
                             {1000, make_rat(29094, 1000)},
                             {2400, make_rat(31645, 1000)}});
    }

    // lines "degree bound", '#' starts a comment; bounds are decimal or a/b
    static OdlyzkoTable parse(std::istream& in)
    {
        std::vector<OdlyzkoRow> rows;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos)
                line.resize(h);
            std::istringstream ls(line);
            std::string d, b;
            if (!(ls >> d))
                continue;
            if (!(ls >> b))
                throw std::invalid_argument("odlyzko table line " + std::to_string(lineno) + ": missing bound");
            rows.push_back({std::stol(d), parse_decimal(b)});
        }
        return OdlyzkoTable(std::move(rows));
    }

    static OdlyzkoTable load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open odlyzko table " + path);
        return parse(in);
    }

    // adds user rows; the union must stay monotone
    OdlyzkoTable merged(const OdlyzkoTable& extra) const
    {
        std::vector<OdlyzkoRow> all = rows_;
        for (auto& r : extra.rows_) {
            bool dup = false;
            for (auto& q : all)
                if (q.degree == r.degree) {
                    if (q.bound != r.bound)
                        throw std::invalid_argument("conflicting odlyzko rows for degree " + std::to_string(r.degree));
                    dup = true;
                }
            if (!dup)
                all.push_back(r);
        }
        std::sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.degree < b.degree; });
        return OdlyzkoTable(std::move(all));
    }

    const std::vector<OdlyzkoRow>& rows() const { return rows_; }

    // largest tabulated row with degree <= n
    std::optional<OdlyzkoRow> row_at_most(long n) const
    {
        std::optional<OdlyzkoRow> r;
        for (auto& row : rows_)
            if (row.degree <= n)
                r = row;
        return r;
    }

    static Rat parse_decimal(const std::string& s)
    {
        if (s.find('/') != std::string::npos)
            return parse_rat(s);
        auto dot = s.find('.');
        if (dot == std::string::npos)
            return parse_rat(s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::string den = "1" + std::string(s.size() - dot - 1, '0');
        return parse_rat(digits + "/" + den);
    }

private:
    void validate() const
    {
        if (rows_.empty())
            throw std::invalid_argument("odlyzko table is empty");
        for (std::size_t i = 1; i < rows_.size(); ++i) {
            if (rows_[i].degree <= rows_[i - 1].degree)
                throw std::invalid_argument("odlyzko degrees must increase strictly");
            if (rows_[i].bound < rows_[i - 1].bound)
                throw std::invalid_argument("odlyzko bounds must not decrease");
        }
        for (auto& r : rows_)
            if (r.degree < 1 || r.bound <= 0)
                throw std::invalid_argument("odlyzko row out of range");
    }

    std::vector<OdlyzkoRow> rows_;
};

} // namespace semiaudit

#endif
