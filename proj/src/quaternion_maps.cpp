#include "cf/quaternion_maps.hpp"

#include "cf/error.hpp"

namespace cf {

namespace {

std::string negate_label(std::string_view label) {
  if (label.starts_with('-'))
    return std::string(label.substr(1));
  return "-" + std::string(label);
}

} // namespace

GroupMap q8_signed_extension(std::string_view image_i, std::string_view image_j,
                             std::string_view image_k) {
  const FiniteGroup q8 = standard_group(StandardKind::q8());
  std::vector<Element> images(q8.order());
  images[q8.element("1")] = q8.element("1");
  images[q8.element("-1")] = q8.element("-1");
  const std::pair<std::string_view, std::string_view> units[] = {
      {"i", image_i}, {"j", image_j}, {"k", image_k}};
  for (auto [unit, image] : units) {
    images[q8.element(unit)] = q8.element(image);
    images[q8.element(negate_label(unit))] = q8.element(negate_label(image));
  }
  return classify_map(q8, q8, std::move(images));
}

GroupMap q8_lambda() { return q8_signed_extension("k", "-i", "j"); }
GroupMap q8_sigma() { return q8_signed_extension("j", "-k", "i"); }
GroupMap q8_tau() { return q8_signed_extension("j", "k", "i"); }

GroupMap named_map(const FiniteGroup &group, std::string_view name) {
  if (name == "id")
    return identity_map(group);
  if (name == "inv")
    return inversion_map(group);
  if (name == "lambda" || name == "sigma" || name == "tau") {
    const FiniteGroup q8 = standard_group(StandardKind::q8());
    if (!group.same_structure(q8))
      throw Error(ErrorCode::UnknownKind,
                  "map '" + std::string(name) + "' is only defined on q8");
    if (name == "lambda")
      return q8_lambda();
    if (name == "sigma")
      return q8_sigma();
    return q8_tau();
  }
  throw Error(ErrorCode::UnknownKind, "unknown map '" + std::string(name) + "'");
}

std::vector<std::string> named_map_names() {
  return {"id", "inv", "lambda", "sigma", "tau"};
}

} // namespace cf
