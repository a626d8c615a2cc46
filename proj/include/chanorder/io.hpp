#pragma once

#include <chanorder/orders.hpp>
#include <chanorder/utility_classes.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace chanorder {

// On-disk document: {"matrix": [["9/10","0"],["1/10","1"]],
//                    "input_dist": ["1/2","1/2"], "name": "..."}.
// Rows are output letters, columns are input letters, columns sum to 1.
// Rationals are strings, never floats, so files round-trip bit-exactly.
struct ChannelFile {
  std::string name;
  RMatrix matrix;
  std::optional<InputDistribution> input_dist;
};

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + '"');
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse \"" + path + "\": " + e.what());
  }
  return doc;
}

inline RMatrix matrix_from_json(const nlohmann::json& rows, const std::string& path) {
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("\"" + path + "\": \"matrix\" must be a nonempty array of rows");
  }
  std::vector<Rational> entries;
  const std::size_t ncols = rows.front().is_array() ? rows.front().size() : 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ncols || ncols == 0) {
      throw std::invalid_argument("\"" + path + "\": matrix rows must be equal-length arrays");
    }
    for (const auto& cell : row) {
      if (!cell.is_string()) {
        throw std::invalid_argument("\"" + path +
                                    "\": matrix entries must be rational strings like \"9/10\"");
      }
      entries.push_back(parse_rational(cell.get<std::string>()));
    }
  }
  return RMatrix(rows.size(), ncols, std::move(entries));
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& values,
                                                 const std::string& path) {
  if (!values.is_array() || values.empty()) {
    throw std::invalid_argument("\"" + path + "\": expected a nonempty array of rational strings");
  }
  std::vector<Rational> out;
  for (const auto& cell : values) {
    if (!cell.is_string()) {
      throw std::invalid_argument("\"" + path + "\": entries must be rational strings");
    }
    out.push_back(parse_rational(cell.get<std::string>()));
  }
  return out;
}

}  // namespace detail

inline ChannelFile load_channel_file(const std::string& path, bool allow_unnormalized = false) {
  const nlohmann::json doc = detail::read_json_file(path);
  if (!doc.contains("matrix")) {
    throw std::invalid_argument("\"" + path + "\": missing \"matrix\"");
  }
  ChannelFile file{doc.value("name", std::string{}), detail::matrix_from_json(doc["matrix"], path),
                   std::nullopt};
  if (!is_column_stochastic(file.matrix)) {
    throw std::invalid_argument("\"" + path + "\": matrix is not column-stochastic");
  }
  if (doc.contains("input_dist")) {
    std::vector<Rational> weights = detail::rationals_from_json(doc["input_dist"], path);
    if (weights.size() != file.matrix.cols()) {
      throw std::invalid_argument("\"" + path + "\": input_dist length must match the columns");
    }
    file.input_dist = InputDistribution(std::move(weights), allow_unnormalized);
  }
  return file;
}

inline Channel load_channel(const std::string& path) {
  return Channel(load_channel_file(path).matrix);
}

inline UtilityMatrix load_utility(const std::string& path) {
  const nlohmann::json doc = detail::read_json_file(path);
  if (!doc.contains("matrix")) {
    throw std::invalid_argument("\"" + path + "\": missing \"matrix\"");
  }
  return UtilityMatrix(detail::matrix_from_json(doc["matrix"], path));
}

// {"weights": ["1/4", "3/4"]}
inline InputDistribution load_distribution(const std::string& path,
                                           bool allow_unnormalized = false) {
  const nlohmann::json doc = detail::read_json_file(path);
  if (!doc.contains("weights")) {
    throw std::invalid_argument("\"" + path + "\": missing \"weights\"");
  }
  return InputDistribution(detail::rationals_from_json(doc["weights"], path),
                           allow_unnormalized);
}

// Rows on lines, entries space-separated, canonical "p/q" throughout.
inline std::string format_matrix(const RMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

// Deterministic rendering of an order verdict. Yes certificates are
// re-verified by exact arithmetic before anything is emitted.
inline std::string format_verdict(const Channel& c, const Channel& cbar, const Verdict& verdict) {
  std::ostringstream out;
  switch (verdict.answer) {
    case Answer::Yes: {
      out << "YES\n";
      if (const GarblingPair* pair = verdict.garbling()) {
        if (!verify_garbling(c, cbar, *pair)) {
          throw std::logic_error("refusing to print an unverified garbling certificate");
        }
        out << "post-garbling M:\n" << format_matrix(pair->post);
        out << "pre-garbling N:\n" << format_matrix(pair->pre);
      } else if (const Mixture* mixture = verdict.mixture()) {
        if (!verify_mixture(c, cbar, *mixture)) {
          throw std::logic_error("refusing to print an unverified mixture certificate");
        }
        out << "mixture with " << mixture->terms.size() << " term(s):\n";
        for (std::size_t i = 0; i < mixture->terms.size(); ++i) {
          const MixtureTerm& term = mixture->terms[i];
          out << "term " << (i + 1) << " weight " << to_string(term.weight) << '\n';
          out << "post-garbling M:\n" << format_matrix(term.post);
          out << "pre-garbling N:\n" << format_matrix(term.pre);
        }
      }
      break;
    }
    case Answer::No: {
      out << "NO\n";
      if (const Witness* witness = verdict.witness()) {
        out << "separating utility:\n" << format_matrix(witness->utility.matrix());
        out << "value(A) = " << to_string(witness->value_left) << '\n';
        out << "value(B) = " << to_string(witness->value_right) << '\n';
      }
      break;
    }
    case Answer::Unknown:
      out << "UNKNOWN\n";
      break;
  }
  return out.str();
}

inline std::string format_comparison(const ReducedComparison& comparison) {
  std::ostringstream out;
  switch (comparison.answer) {
    case DominanceAnswer::Dominates:
      out << "DOMINATES\n";
      break;
    case DominanceAnswer::DominatedStrictlyAt: {
      out << "DOMINATED_STRICTLY\n";
      out << "witness utility:\n" << format_matrix(comparison.witness->matrix());
      out << "value(A) = " << to_string(comparison.value_left) << '\n';
      out << "value(B) = " << to_string(comparison.value_right) << '\n';
      break;
    }
    case DominanceAnswer::Unknown:
      out << "UNKNOWN\n";
      break;
  }
  return out.str();
}

}  // namespace chanorder
