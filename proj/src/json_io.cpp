#include "cf/json_io.hpp"

#include "cf/error.hpp"

namespace cf {

using nlohmann::json;

namespace {

std::string string_field(const json &doc, const char *field) {
  if (!doc.is_object())
    throw Error(ErrorCode::SyntaxError, "expected a JSON object");
  auto it = doc.find(field);
  if (it == doc.end() || !it->is_string())
    throw Error(ErrorCode::SyntaxError,
                std::string("field \"") + field + "\" must be a string");
  return it->get<std::string>();
}

} // namespace

json map_to_json(const GroupMap &map) {
  json images = json::array();
  for (Element g = 0; g < map.images().size(); ++g)
    images.push_back(map.target().label(map(g)));
  return {{"source", map.source().name()},
          {"target", map.target().name()},
          {"images", std::move(images)},
          {"kind", std::string(to_string(map.kind()))}};
}

GroupMap map_from_json(const json &doc, const FiniteGroup &source,
                       const FiniteGroup &target) {
  if (string_field(doc, "source") != source.name())
    throw Error(ErrorCode::SourceTargetMismatch,
                "map source is '" + string_field(doc, "source") + "', expected '" +
                    source.name() + "'");
  if (string_field(doc, "target") != target.name())
    throw Error(ErrorCode::SourceTargetMismatch,
                "map target is '" + string_field(doc, "target") + "', expected '" +
                    target.name() + "'");
  auto images = doc.find("images");
  if (images == doc.end() || !images->is_array())
    throw Error(ErrorCode::SyntaxError, "field \"images\" must be an array");
  std::vector<std::string> labels;
  for (const auto &image : *images) {
    if (!image.is_string())
      throw Error(ErrorCode::SyntaxError, "map images must be label strings");
    labels.push_back(image.get<std::string>());
  }
  GroupMap map = map_from_labels(source, target, labels);
  if (doc.contains("kind")) {
    const std::string declared = string_field(doc, "kind");
    if (!parse_map_kind(declared))
      throw Error(ErrorCode::SyntaxError, "unknown map kind '" + declared + "'");
    if (declared != to_string(map.kind()))
      throw Error(ErrorCode::SyntaxError,
                  "map declared as '" + declared + "' classifies as '" +
                      std::string(to_string(map.kind())) + "'");
  }
  return map;
}

json assignment_to_json(const RoleAssignment &assignment) {
  json doc = {{"group", assignment.group().name()}};
  for (Role role : kRoles)
    doc[std::string(1, role_letter(role))] =
        assignment.group().label(assignment.value(role));
  return doc;
}

RoleAssignment assignment_from_json(const json &doc, const FiniteGroup &group,
                                    Distinctness policy) {
  if (string_field(doc, "group") != group.name())
    throw Error(ErrorCode::SourceTargetMismatch,
                "assignment is for group '" + string_field(doc, "group") +
                    "', expected '" + group.name() + "'");
  std::array<std::string, 4> labels;
  for (Role role : kRoles) {
    const std::string field(1, role_letter(role));
    labels[index(role)] = string_field(doc, field.c_str());
  }
  return RoleAssignment::from_labels(group, labels, policy);
}

json chain_to_json(const Chain &chain, const FiniteGroup *group) {
  json steps = json::array();
  for (const auto &step : chain.steps) {
    json entry = {{"step", step.step}, {"side", to_string(step.side)}};
    if (step.tuple && group) {
      json tuple = json::array();
      for (Element g : *step.tuple)
        tuple.push_back(group->label(g));
      entry["tuple"] = std::move(tuple);
    }
    steps.push_back(std::move(entry));
  }
  return steps;
}

} // namespace cf
