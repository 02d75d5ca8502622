#include "mia/format.hpp"

#include <fstream>
#include <sstream>

namespace mia {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void fail(std::string_view origin, int line,
                       const std::string& message) {
  std::ostringstream os;
  if (!origin.empty()) os << origin << ":";
  os << "line " << line << ": " << message;
  throw Error(ErrorCode::kParse, os.str());
}

}  // namespace

RawModel parse_model(std::string_view text, std::string_view origin) {
  RawModel raw;
  bool have_header = false;
  bool have_init = false;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];

    if (!have_header) {
      if (kw != "mia" && kw != "iolts")
        fail(origin, lineno, "expected 'mia <name>' or 'iolts <name>' header");
      if (tokens.size() != 2)
        fail(origin, lineno, "header takes exactly one name token");
      raw.kind = kw == "mia" ? RawModel::Kind::kMia : RawModel::Kind::kIolts;
      raw.name = tokens[1];
      have_header = true;
      continue;
    }

    auto rest = [&] {
      return std::vector<std::string>(tokens.begin() + 1, tokens.end());
    };
    if (kw == "inputs") {
      auto r = rest();
      raw.inputs.insert(raw.inputs.end(), r.begin(), r.end());
    } else if (kw == "outputs") {
      auto r = rest();
      raw.outputs.insert(raw.outputs.end(), r.begin(), r.end());
    } else if (kw == "states") {
      auto r = rest();
      raw.states.insert(raw.states.end(), r.begin(), r.end());
    } else if (kw == "init") {
      if (tokens.size() != 2) fail(origin, lineno, "init takes one state");
      if (have_init) fail(origin, lineno, "duplicate init line");
      raw.initial = tokens[1];
      have_init = true;
    } else if (kw == "must" || kw == "may" || kw == "trans") {
      if (tokens.size() != 4)
        fail(origin, lineno,
             "transition line takes '" + kw + " <src> <action> <dst>'");
      bool is_mia_kw = kw != "trans";
      if ((raw.kind == RawModel::Kind::kMia) != is_mia_kw)
        fail(origin, lineno,
             raw.kind == RawModel::Kind::kMia
                 ? "iolts keyword 'trans' in a mia model"
                 : "mia keyword '" + kw + "' in an iolts model");
      RawModel::RawTransition rt;
      rt.modality = kw == "may" ? Modality::kMay : Modality::kMust;
      rt.transition = {tokens[1], tokens[2], tokens[3]};
      rt.line = lineno;
      raw.transitions.push_back(std::move(rt));
    } else {
      fail(origin, lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) fail(origin, lineno + 1, "missing model header");
  if (!have_init) fail(origin, lineno + 1, "missing init line");
  return raw;
}

RawModel load_raw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kParse, "cannot open model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path);
}

std::variant<Mia, Iolts> load_model(const std::string& path) {
  RawModel raw = load_raw(path);
  if (raw.kind == RawModel::Kind::kMia) return Mia::from_raw(raw);
  return Iolts::from_raw(raw);
}

Mia load_mia(const std::string& path) {
  RawModel raw = load_raw(path);
  if (raw.kind == RawModel::Kind::kMia) return Mia::from_raw(raw);
  return embed_iolts(Iolts::from_raw(raw));
}

Iolts load_iolts(const std::string& path) {
  RawModel raw = load_raw(path);
  if (raw.kind != RawModel::Kind::kIolts)
    throw Error(ErrorCode::kParse,
                path + ": expected an iolts model, found 'mia " + raw.name +
                    "'");
  return Iolts::from_raw(raw);
}

namespace {

void write_common(std::ostream& os, const char* header,
                  const std::string& name, const Alphabet& alphabet,
                  const std::vector<std::string>& states,
                  const std::string& initial,
                  const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << header << " " << name << "\n";
  os << "inputs";
  for (const std::string& a : alphabet.inputs()) os << " " << a;
  os << "\n";
  os << "outputs";
  for (const std::string& a : alphabet.outputs()) os << " " << a;
  os << "\n";
  os << "states";
  for (const std::string& s : states) os << " " << s;
  os << "\n";
  os << "init " << initial << "\n";
}

}  // namespace

std::string serialize(const Mia& m,
                      const std::vector<std::string>& header_comment) {
  std::ostringstream os;
  write_common(os, "mia", m.name(), m.alphabet(), m.states(), m.initial(),
               header_comment);
  for (const Transition& t : m.must_transitions())
    os << "must " << t.source << " " << t.action << " " << t.target << "\n";
  for (const Transition& t : m.optional_transitions())
    os << "may " << t.source << " " << t.action << " " << t.target << "\n";
  return os.str();
}

std::string serialize(const Iolts& m,
                      const std::vector<std::string>& header_comment) {
  std::ostringstream os;
  write_common(os, "iolts", m.name(), m.alphabet(), m.states(), m.initial(),
               header_comment);
  for (const Transition& t : m.transitions())
    os << "trans " << t.source << " " << t.action << " " << t.target << "\n";
  return os.str();
}

}  // namespace mia
