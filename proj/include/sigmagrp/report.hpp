#ifndef SIGMAGRP_REPORT_HPP
#define SIGMAGRP_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "subgroup.hpp"

namespace sigmagrp
{

using Json = nlohmann::ordered_json;

/// The six checked statements. The string ids are the external names used on
/// the command line and in report records.
enum class Statement
{
  sylowizer_restriction,     // L2.1
  quotient_correspondence,   // L2.2
  permutable_sylowizer,      // L2.3
  c_permutable_iff_index,    // L2.4
  supersoluble_criterion,    // T2.5
  formation_criterion,       // T2.6
};

inline constexpr std::array all_statements{
  Statement::sylowizer_restriction,  Statement::quotient_correspondence,
  Statement::permutable_sylowizer,   Statement::c_permutable_iff_index,
  Statement::supersoluble_criterion, Statement::formation_criterion,
};

inline std::string_view statement_id(Statement s)
{
  switch (s) {
  case Statement::sylowizer_restriction: return "L2.1";
  case Statement::quotient_correspondence: return "L2.2";
  case Statement::permutable_sylowizer: return "L2.3";
  case Statement::c_permutable_iff_index: return "L2.4";
  case Statement::supersoluble_criterion: return "T2.5";
  case Statement::formation_criterion: return "T2.6";
  }
  return "?";
}

inline std::optional<Statement> statement_from_id(std::string_view id)
{
  for (auto s : all_statements) {
    if (statement_id(s) == id)
      return s;
  }
  return std::nullopt;
}

enum class Status
{
  verified,
  hypothesis_not_met,
  counterexample,
};

inline std::string_view status_name(Status s)
{
  switch (s) {
  case Status::verified: return "verified";
  case Status::hypothesis_not_met: return "hypothesis-not-met";
  case Status::counterexample: return "counterexample";
  }
  return "?";
}

/// cases_checked counts every instantiation examined; positive_cases the
/// ones where the statement's hypothesis held and its conclusion was tested.
struct CaseStats
{
  std::uint64_t cases_checked = 0;
  std::uint64_t positive_cases = 0;
  bool sampled = false;
  std::uint64_t stride = 1;
};

struct VerificationReport
{
  Statement statement{};
  std::string group;
  std::uint64_t group_order = 0;
  std::string sigma;
  Status status = Status::verified;
  Json witness = Json::object();
  CaseStats stats;
};

inline Json to_json(VerificationReport const &r)
{
  Json j;
  j["statement"] = statement_id(r.statement);
  j["group"] = {{"name", r.group}, {"order", r.group_order}};
  j["sigma"] = r.sigma;
  j["status"] = status_name(r.status);
  j["witness"] = r.witness;
  j["stats"] = {{"cases_checked", r.stats.cases_checked},
                {"positive_cases", r.stats.positive_cases},
                {"sampled", r.stats.sampled},
                {"stride", r.stats.stride}};
  return j;
}

/// One line of the report stream; key order is fixed.
inline std::string to_line(VerificationReport const &r)
{
  return to_json(r).dump();
}

inline std::string to_text(VerificationReport const &r)
{
  return r.group + " (order " + std::to_string(r.group_order) + ")  sigma=" +
         (r.sigma.empty() ? "-" : r.sigma) + "  " + std::string(statement_id(r.statement)) +
         "  " + std::string(status_name(r.status)) +
         "  cases=" + std::to_string(r.stats.cases_checked) +
         " positive=" + std::to_string(r.stats.positive_cases) +
         (r.stats.sampled ? " sampled(stride " + std::to_string(r.stats.stride) + ")" : "");
}

inline Json subgroup_json(Subgroup const &h)
{
  Json j;
  j["order"] = h.order();
  j["gens"] = h.generator_cycles();
  return j;
}

} // namespace sigmagrp

#endif // SIGMAGRP_REPORT_HPP
