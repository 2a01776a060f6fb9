// Command line front end. Exit codes: 0 success, 1 check or verification
// failed, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stlc/bidir.hpp"
#include "stlc/certificate_json.hpp"
#include "stlc/enumerate.hpp"
#include "stlc/interpolate.hpp"
#include "stlc/reduction.hpp"
#include "stlc/sexpr.hpp"
#include "stlc/typing.hpp"

using namespace stlc;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parsed(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(what + ": " + e.what());
  }
}

void add_bases(Language& lang, const Type& t) {
  for (const auto& b : t.base_names()) lang.add_base(b);
}

void add_bases(Language& lang, const Term& t) {
  if (t.has_annotation()) add_bases(lang, t.annotation());
  for (const auto& c : t.children()) add_bases(lang, c);
}

struct Inputs {
  std::string lang_file, ctx, term, type;
  Language lang;
  Context gamma;
  std::optional<Term> t;
  std::optional<Type> ty;

  // Without --lang the language has no constants and the base types seen in
  // the inputs.
  void load() {
    gamma = parsed("--ctx", [&] { return parse_context(ctx); });
    if (!term.empty()) t = parsed("--term", [&] { return parse_term(term); });
    if (!type.empty()) ty = parsed("--type", [&] { return parse_type(type); });
    if (!lang_file.empty()) {
      lang = parsed(lang_file, [&] { return parse_language(read_file(lang_file)); });
      auto closed = [&](const Type& a, const std::string& where) {
        if (!vocab_closed(a, lang)) throw InputError(where + " uses a base type not declared in " + lang_file);
      };
      for (const auto& a : gamma.entries()) closed(a, "--ctx");
      if (ty) closed(*ty, "--type");
    } else {
      for (const auto& a : gamma.entries()) add_bases(lang, a);
      if (ty) add_bases(lang, *ty);
      if (t) add_bases(lang, *t);
    }
  }
};

void add_common(CLI::App* cmd, Inputs& in, bool need_type) {
  cmd->add_option("--lang", in.lang_file, "language file (base and const declarations)");
  cmd->add_option("--ctx", in.ctx, "context: types separated by spaces, oldest first");
  cmd->add_option("--term", in.term, "term")->required();
  auto* type = cmd->add_option("--type", in.type, "type");
  if (need_type) type->required();
}

void print_trace(const std::vector<Reduct>& trace) {
  for (const auto& r : trace)
    std::cout << "  " << to_string(r.kind) << " " << path_to_string(r.path) << " " << print(r.result) << "\n";
}

int print_report(const Report& rep) {
  for (const auto& c : rep.clauses) {
    std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
  std::cout << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return rep.all_pass() ? 0 : 1;
}

ConstTags parse_const_tags(const std::string& text) {
  ConstTags out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--const-tags: expected NAME=s or NAME=t, got '" + item + "'");
    std::string side = item.substr(eq + 1);
    if (side != "s" && side != "t") throw InputError("--const-tags: side of '" + item.substr(0, eq) + "' must be s or t");
    out[item.substr(0, eq)] = side == "s" ? Side::Source : Side::Target;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simply typed lambda calculus with sums: typing, normalisation and interpolation"};
  app.require_subcommand(1);

  Inputs in;
  std::size_t fuel = default_fuel;
  bool trace = false, as_json = false;
  std::string tags, const_tags, cert_file;
  std::size_t size = 4, pool_depth = 1;

  auto* check_cmd = app.add_subcommand("check", "check a term against a type");
  add_common(check_cmd, in, true);
  auto* infer_cmd = app.add_subcommand("infer", "infer the type of a term");
  add_common(infer_cmd, in, false);
  auto* norm_cmd = app.add_subcommand("normalize", "print the normal form of a well-typed term");
  add_common(norm_cmd, in, false);
  norm_cmd->add_flag("--trace", trace, "print every reduction step");
  norm_cmd->add_option("--fuel", fuel, "maximum number of steps");
  auto* nf_cmd = app.add_subcommand("nf-check", "is the term a normal form of the type");
  add_common(nf_cmd, in, true);
  auto* ne_cmd = app.add_subcommand("neutral-infer", "infer the type of a neutral term");
  add_common(ne_cmd, in, false);
  auto* ip_cmd = app.add_subcommand("interpolate", "interpolate a term over a tagged context");
  add_common(ip_cmd, in, true);
  ip_cmd->add_option("--tags", tags, "one letter s or t per context entry, default all s");
  ip_cmd->add_option("--const-tags", const_tags, "NAME=s|t,... covering every constant");
  ip_cmd->add_option("--fuel", fuel, "maximum number of reduction steps");
  ip_cmd->add_flag("--json", as_json, "print the certificate as JSON");
  auto* verify_cmd = app.add_subcommand("verify", "re-check a JSON certificate");
  verify_cmd->add_option("file", cert_file, "certificate file, - for stdin")->required();
  auto* enum_cmd = app.add_subcommand("enumerate", "count terms and normal forms per type and size");
  enum_cmd->add_option("--lang", in.lang_file, "language file");
  enum_cmd->add_option("--ctx", in.ctx, "context");
  enum_cmd->add_option("--type", in.type, "only this type (default: every type of depth <= 1)");
  enum_cmd->add_option("--size", size, "largest term size")->check(CLI::Range(1, 8));
  enum_cmd->add_option("--pool-depth", pool_depth, "depth of the annotation pool")->check(CLI::Range(0, 2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(read_file(cert_file));
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
      }
      Certificate c = [&] {
        try {
          return certificate_from_json(doc);
        } catch (const std::exception& e) {
          throw InputError(e.what());
        }
      }();
      return print_report(verify_certificate(c));
    }

    in.load();

    if (*enum_cmd) {
      Enumerator en(in.lang, enum_types(in.lang, pool_depth));
      std::vector<Type> types = in.ty ? std::vector<Type>{*in.ty} : enum_types(in.lang, 1);
      std::cout << "type\tsize\tterms\tnormal\n";
      for (const auto& ty : types) {
        for (std::size_t n = 1; n <= size; ++n) {
          auto ts = en.terms_of_size(in.gamma, ty, n);
          std::size_t nfs = 0;
          for (const auto& t : ts) nfs += check_nf(in.lang, in.gamma, t, ty);
          std::cout << print(ty) << "\t" << n << "\t" << ts.size() << "\t" << nfs << "\n";
        }
      }
      return 0;
    }

    const Term& t = *in.t;
    if (*check_cmd) {
      try {
        Type got = infer(in.lang, in.gamma, t);
        if (got == *in.ty) {
          std::cout << "ok\n";
          return 0;
        }
        std::cout << "mismatch: term has type " << print(got) << "\n";
      } catch (const TypeError& e) {
        std::cout << "type error: " << e.what() << "\n";
      }
      return 1;
    }
    if (*infer_cmd) {
      try {
        std::cout << print(infer(in.lang, in.gamma, t)) << "\n";
        return 0;
      } catch (const TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 1;
      }
    }
    if (*norm_cmd) {
      std::vector<Reduct> steps;
      try {
        Term nf = normalize(in.lang, in.gamma, t, fuel, &steps);
        std::cout << print(nf) << "\n";
        if (trace) print_trace(steps);
        return 0;
      } catch (const TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
      } catch (const FuelExhausted& e) {
        std::cerr << e.what() << "\n";
      }
      return 1;
    }
    if (*nf_cmd) {
      bool ok = check_nf(in.lang, in.gamma, t, *in.ty);
      std::cout << (ok ? "normal" : "not normal") << "\n";
      return ok ? 0 : 1;
    }
    if (*ne_cmd) {
      auto ty = infer_ne(in.lang, in.gamma, t);
      if (!ty) {
        std::cout << "not neutral\n";
        return 1;
      }
      std::cout << print(*ty) << "\n";
      return 0;
    }
    if (*ip_cmd) {
      std::vector<Side> sides;
      try {
        sides = tags.empty() ? std::vector<Side>(in.gamma.size(), Side::Source) : parse_tags(tags);
        if (sides.size() != in.gamma.size()) throw std::invalid_argument("--tags needs one letter per context entry");
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      std::optional<ConstTags> ct;
      if (!const_tags.empty()) ct = parse_const_tags(const_tags);
      Certificate c = [&] {
        try {
          return certify(in.lang, in.gamma, sides, ct, t, *in.ty, fuel);
        } catch (const UntaggedConstant& e) {
          throw InputError(e.what());
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }();
      Report rep = verify_certificate(c);
      if (as_json) {
        std::cout << to_json(c, rep).dump(2) << "\n";
        return rep.all_pass() ? 0 : 1;
      }
      std::cout << "M = " << print(c.mid) << "\n"
                << "l = " << print(c.left) << "\n"
                << "r = " << print(c.right) << "\n"
                << "normal form = " << print(c.normal_form) << "\n"
                << "composed = " << print(c.composed) << "\n";
      return print_report(rep);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 1;
  } catch (const FuelExhausted& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
