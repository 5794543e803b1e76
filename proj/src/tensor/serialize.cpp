#include "qlorentz/tensor/serialize.hpp"

namespace qlorentz {

nlohmann::json to_json(const TMap& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"in", to_string(m.in_sig())}, {"out", to_string(m.out_sig())}, {"entries", std::move(rows)}};
}

}  // namespace qlorentz
