#include <algorithm>
#include <set>
#include <tuple>

#include "rankforge/rectangles.hpp"

namespace rankforge {

bool Rectangle::operator<(const Rectangle& other) const {
    return std::tie(rows, cols) < std::tie(other.rows, other.cols);
}

bool RectangleSolution::operator<(const RectangleSolution& other) const {
    return rectangles < other.rectangles;
}

void RectangleSolution::validate_against(const BinaryMatrix& m) const {
    if (n_rows != m.rows() || n_cols != m.cols())
        throw InvariantViolation("solution attached to a matrix of different shape");
    std::set<std::pair<int, int>> covered;
    std::size_t cell_total = 0;
    for (const Rectangle& rect : rectangles) {
        if (rect.rows.empty() || rect.cols.empty())
            throw InvariantViolation("rectangle with empty row or column set");
        for (int r : rect.rows)
            for (int c : rect.cols) {
                if (r < 0 || c < 0 || (std::size_t)r >= m.rows() || (std::size_t)c >= m.cols())
                    throw InvariantViolation("rectangle index out of range");
                if (!m.get(r, c)) throw InvariantViolation("rectangle touches a 0-entry");
                covered.emplace(r, c);
                ++cell_total;
            }
    }
    if (kind == SolutionKind::Partition && cell_total != covered.size())
        throw InvariantViolation("partition rectangles overlap");
    if (covered.size() != m.ones_count())
        throw InvariantViolation("rectangles do not cover every 1-entry exactly");
}

void to_json(nlohmann::json& j, const Rectangle& r) {
    j = nlohmann::json{{"rows", r.rows}, {"cols", r.cols}};
}

void to_json(nlohmann::json& j, const RectangleSolution& s) {
    j = nlohmann::json{{"kind", s.kind == SolutionKind::Partition ? "partition" : "cover"},
                       {"rectangles", s.rectangles}};
}

void to_json(nlohmann::json& j, const RankResult& r) {
    j = nlohmann::json{{"rank", r.rank}};
    if (r.witness) {
        j["kind"] = r.witness->kind == SolutionKind::Partition ? "partition" : "cover";
        j["rectangles"] = r.witness->rectangles;
    } else {
        j["kind"] = nullptr;
        j["rectangles"] = nlohmann::json::array();
    }
}

}  // namespace rankforge
