#include "csitdof/csv.hpp"

#include <sstream>

namespace csitdof {

namespace {

std::string header_columns(const std::string& prefix, std::size_t count) {
    std::string out;
    for (std::size_t i = 1; i <= count; ++i) {
        out += (i > 1 ? "," : "") + prefix + std::to_string(i);
    }
    return out;
}

std::string joined(const RationalVector& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i > 0 ? "," : "") + to_string(values[i]);
    }
    return out;
}

std::string display(const RationalVector& values, int decimals) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i > 0 ? " " : "") + to_decimal(values[i], decimals);
    }
    return out + ")";
}

std::string display_header(const std::optional<int>& decimals) {
    return decimals ? ",display" : "";
}

}  // namespace

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string bounds_csv(const BoundSet& bounds, std::optional<int> decimals) {
    std::ostringstream out;
    out << "tag," << header_columns("c_", bounds.users()) << ",rhs" << display_header(decimals) << "\n";
    for (const auto& row : bounds.inequalities()) {
        out << csv_field(row.tag) << "," << joined(row.coeffs) << "," << to_string(row.rhs);
        if (decimals) {
            out << "," << to_decimal(row.rhs, *decimals);
        }
        out << "\n";
    }
    return out.str();
}

std::string vertices_csv(const VertexSet& vertices, std::optional<int> decimals) {
    std::ostringstream out;
    out << header_columns("v_", vertices.dim) << display_header(decimals) << "\n";
    for (const auto& p : vertices.points) {
        out << joined(p);
        if (decimals) {
            out << "," << display(p, *decimals);
        }
        out << "\n";
    }
    return out.str();
}

std::string sumdof_csv(const WeightedOptimum& optimum, std::optional<int> decimals) {
    std::ostringstream out;
    out << "weighted_sum,decimal," << header_columns("d_", optimum.argmax.size()) << "\n";
    out << to_string(optimum.value) << "," << to_decimal(optimum.value, decimals.value_or(6)) << ","
        << joined(optimum.argmax) << "\n";
    return out.str();
}

std::string corners_csv(const std::vector<CornerPoint>& corners, std::optional<int> decimals) {
    std::ostringstream out;
    const std::size_t dim = corners.empty() ? 0 : corners.front().coords.size();
    out << "label," << header_columns("d_", dim) << display_header(decimals) << "\n";
    for (const auto& c : corners) {
        out << csv_field(c.label) << "," << joined(c.coords);
        if (decimals) {
            out << "," << display(c.coords, *decimals);
        }
        out << "\n";
    }
    return out.str();
}

std::string tightness_csv(const TightnessReport& report, std::optional<int> decimals) {
    std::ostringstream out;
    const std::size_t dim = report.vertices.empty() ? 0 : report.vertices.front().vertex.size();
    out << header_columns("v_", dim) << ",achievable" << display_header(decimals) << "\n";
    for (const auto& v : report.vertices) {
        out << joined(v.vertex) << "," << (v.achievable ? "yes" : "no");
        if (decimals) {
            out << "," << display(v.vertex, *decimals);
        }
        out << "\n";
    }
    return out.str();
}

std::string ledger_csv(const DecodeLedger& ledger, std::optional<int> decimals) {
    std::ostringstream out;
    out << "user,intended,decodable,dof" << display_header(decimals) << "\n";
    for (std::size_t u = 0; u < ledger.users.size(); ++u) {
        const Rational dof = ledger.dof(u);
        out << (u + 1) << "," << ledger.users[u].intended << "," << ledger.users[u].decodable << ","
            << to_string(dof);
        if (decimals) {
            out << "," << to_decimal(dof, *decimals);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace csitdof
