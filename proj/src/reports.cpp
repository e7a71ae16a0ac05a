#include "overpart/reports.hpp"

#include "overpart/errors.hpp"

namespace overpart {

namespace {

template <class Member>
nlohmann::json preimage_json(const PreimageReport<Member>& r) {
  nlohmann::json fiber = nlohmann::json::array();
  for (const auto& x : r.fiber) fiber.push_back(format(x));
  return {{"mu", format(r.mu)},
          {"t", r.t},
          {"fiber", std::move(fiber)},
          {"same_overlines", r.same_overlines},
          {"one_more_overline", r.one_more_overline},
          {"expected_size", r.expected_size}};
}

template <class Member, class Parse>
PreimageReport<Member> preimage_from_json(const nlohmann::json& j, Parse parse) {
  try {
    PreimageReport<Member> r{parse_overpartition(j.at("mu").get<std::string>()), j.at("t").get<int>(), {}, 0, 0, 0};
    for (const auto& x : j.at("fiber")) r.fiber.push_back(parse(x.get<std::string>()));
    r.same_overlines = j.at("same_overlines").get<int>();
    r.one_more_overline = j.at("one_more_overline").get<int>();
    r.expected_size = j.at("expected_size").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("preimage report JSON: ") + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const PreimageReport<Overpartition>& r) { return preimage_json(r); }
nlohmann::json to_json(const PreimageReport<Bipartition>& r) { return preimage_json(r); }

PreimageReport<Overpartition> phi_report_from_json(const nlohmann::json& j) {
  return preimage_from_json<Overpartition>(j, [](std::string_view s) { return parse_overpartition(s); });
}

PreimageReport<Bipartition> psi_report_from_json(const nlohmann::json& j) {
  return preimage_from_json<Bipartition>(j, [](std::string_view s) { return parse_bipartition(s); });
}

nlohmann::json to_json(const ChainReport& r) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : r.lines) lines.push_back({{"label", line.label}, {"equal_to_previous", line.equal_to_previous}});
  nlohmann::json j{{"t", r.t}, {"order", r.order}, {"lines", std::move(lines)}, {"pass", r.pass}};
  if (r.matches_enumeration) j["matches_enumeration"] = *r.matches_enumeration;
  return j;
}

ChainReport chain_report_from_json(const nlohmann::json& j) {
  try {
    ChainReport r;
    r.t = j.at("t").get<int>();
    r.order = j.at("order").get<int>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& line : j.at("lines")) {
      r.lines.push_back({line.at("label").get<std::string>(), QSeries::zero(r.order),
                         line.at("equal_to_previous").get<bool>()});
    }
    if (j.contains("matches_enumeration")) r.matches_enumeration = j.at("matches_enumeration").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("chain report JSON: ") + e.what());
  }
}

nlohmann::json to_json(const FiberCheckReport& r) {
  nlohmann::json j{{"pass", r.pass}, {"checked", r.checked}};
  if (!r.pass) j["first_failure"] = r.first_failure;
  return j;
}

}  // namespace overpart
