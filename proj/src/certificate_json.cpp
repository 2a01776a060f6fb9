#include "stlc/certificate_json.hpp"

#include "stlc/sexpr.hpp"

namespace stlc {

using nlohmann::json;

namespace {

json steps_json(const std::vector<Reduct>& trace) {
  json out = json::array();
  for (const auto& r : trace) out.push_back({{"rule", to_string(r.kind)}, {"path", r.path}, {"term", print(r.result)}});
  return out;
}

std::vector<Reduct> steps_from(const json& arr) {
  std::vector<Reduct> out;
  for (const auto& s : arr) {
    auto kind = redex_kind_from_string(s.at("rule").get<std::string>());
    if (!kind) throw CertificateFormatError("unknown rule '" + s.at("rule").get<std::string>() + "'");
    out.push_back({*kind, s.at("path").get<Path>(), parse_term(s.at("term").get<std::string>())});
  }
  return out;
}

json vocab_json(const Certificate& c, Polarity pol) {
  auto m = vocab(c.mid).at(pol);
  auto bound = vocab_bound(c, pol);
  return {{"M", m}, {"bound", bound}, {"ok", subset(m, bound)}};
}

}  // namespace

json to_json(const Certificate& c, const Report& report) {
  json lang = {{"base", c.lang.base_types()}, {"constants", json::object()}};
  for (const auto& [name, ty] : c.lang.constants()) lang["constants"][name] = print(ty);
  json ctx = json::array();
  for (const auto& ty : c.context.entries()) ctx.push_back(print(ty));
  json ct = json::object();
  for (const auto& [name, side] : c.const_tags) ct[name] = std::string(1, side_char(side));
  return {
      {"input",
       {{"language", lang},
        {"context", ctx},
        {"tags", print_tags(c.tags)},
        {"const_tags", ct},
        {"term", print(c.term)},
        {"type", print(c.type)}}},
      {"M", print(c.mid)},
      {"l", print(c.left)},
      {"r", print(c.right)},
      {"vocab_report", {{"positive", vocab_json(c, Polarity::Pos)}, {"negative", vocab_json(c, Polarity::Neg)}}},
      {"trace",
       {{"normal_form", print(c.normal_form)},
        {"term_steps", steps_json(c.term_trace)},
        {"composed", print(c.composed)},
        {"composed_steps", steps_json(c.composed_trace)}}},
      {"verdict", report.all_pass() ? "PASS" : "FAIL"},
  };
}

Certificate certificate_from_json(const json& doc) {
  try {
    const json& in = doc.at("input");
    Language lang;
    for (const auto& b : in.at("language").at("base")) lang.add_base(b.get<std::string>());
    for (const auto& [name, ty] : in.at("language").at("constants").items())
      lang.add_constant(name, parse_type(ty.get<std::string>()));
    std::vector<Type> ctx;
    for (const auto& ty : in.at("context")) ctx.push_back(parse_type(ty.get<std::string>()));
    ConstTags ct;
    for (const auto& [name, side] : in.at("const_tags").items()) {
      auto s = parse_tags(side.get<std::string>());
      if (s.size() != 1) throw CertificateFormatError("bad side for constant '" + name + "'");
      ct[name] = s[0];
    }
    const json& tr = doc.at("trace");
    return Certificate{lang,
                       Context(std::move(ctx)),
                       parse_tags(in.at("tags").get<std::string>()),
                       ct,
                       parse_term(in.at("term").get<std::string>()),
                       parse_type(in.at("type").get<std::string>()),
                       parse_type(doc.at("M").get<std::string>()),
                       parse_term(doc.at("l").get<std::string>()),
                       parse_term(doc.at("r").get<std::string>()),
                       parse_term(tr.at("normal_form").get<std::string>()),
                       steps_from(tr.at("term_steps")),
                       parse_term(tr.at("composed").get<std::string>()),
                       steps_from(tr.at("composed_steps"))};
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace stlc
