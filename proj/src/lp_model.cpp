#include "dos/lp_model.hpp"

#include <cstdio>
#include <sstream>

namespace dos {

std::string VarLabel::name() const {
    switch (kind) {
        case Kind::StopProb:
            return "x_" + std::to_string(i) + "_" + std::to_string(ell);
        case Kind::Alpha:
            return "alpha";
        default:
            return "v";
    }
}

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string serialize_lp(const LpModel& model) {
    std::ostringstream out;
    out << "vars " << model.num_vars << " rows " << model.rows.size() << ' '
        << (model.maximize ? "maximize" : "minimize") << '\n';
    for (const auto& [col, c] : model.objective) out << "-1 " << col << ' ' << fmt17(c) << '\n';
    for (std::size_t r = 0; r < model.rows.size(); ++r)
        for (const auto& [col, c] : model.rows[r].coeffs)
            out << r << ' ' << col << ' ' << fmt17(c) << '\n';
    for (const auto& row : model.rows)
        out << (row.rel == LpModel::Relation::LessEq ? "<=" : "=") << ' ' << fmt17(row.rhs) << '\n';
    if (model.objective_constant != 0.0) out << "offset " << fmt17(model.objective_constant) << '\n';
    return out.str();
}

LpModel parse_lp(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    LpModel m;
    std::size_t nrows = 0;
    if (!(in >> tok) || tok != "vars") throw std::invalid_argument("parse_lp: missing header");
    in >> m.num_vars;
    if (!(in >> tok) || tok != "rows") throw std::invalid_argument("parse_lp: missing rows count");
    in >> nrows;
    in >> tok;
    m.maximize = (tok == "maximize");
    m.labels.assign(static_cast<std::size_t>(m.num_vars), VarLabel::plain());
    m.rows.resize(nrows);

    std::string first;
    while (in >> first) {
        if (first == "<=" || first == "=") break;  // relation lines start here
        if (first == "offset") {
            in >> m.objective_constant;
            return m;
        }
        int row = std::stoi(first);
        int col;
        double c;
        in >> col >> c;
        if (row == -1)
            m.objective.emplace_back(col, c);
        else
            m.rows[static_cast<std::size_t>(row)].coeffs.emplace_back(col, c);
    }
    // `first` currently holds the first relation token
    for (std::size_t r = 0; r < nrows; ++r) {
        std::string rel = (r == 0) ? first : (in >> tok, tok);
        double rhs;
        in >> rhs;
        m.rows[r].rel = (rel == "=") ? LpModel::Relation::Eq : LpModel::Relation::LessEq;
        m.rows[r].rhs = rhs;
    }
    if (in >> tok && tok == "offset") in >> m.objective_constant;
    return m;
}

}  // namespace dos
