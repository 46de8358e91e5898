#include "cubicpm/report_io.hpp"

#include <array>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace cubicpm {
namespace {

using json = nlohmann::ordered_json;

json measured_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json to_json(const LemmaReport& r) {
  json j;
  j["lemma"] = std::string(to_string(r.lemma));
  j["instance"] = r.instance;
  j["params"] = json::parse(r.params);
  j["hypothesis_met"] = r.hypothesis_met;
  j["bound"] = {{"num", r.bound.coeff.num()},
                {"den", r.bound.coeff.den()},
                {"log2_num", r.bound.log2_num},
                {"log2_den", r.bound.log2_den}};
  j["relation"] = std::string(to_string(r.relation));
  j["measured"] = measured_json(r.measured);
  j["verdict"] = std::string(to_string(r.verdict));
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.dump.empty()) j["dump"] = r.dump;
  return j;
}

Verdict parse_verdict(const std::string& s) {
  if (s == "Pass") return Verdict::Pass;
  if (s == "Fail") return Verdict::Fail;
  if (s == "Skipped") return Verdict::Skipped;
  throw GraphError(ErrorKind::ParseError, "unknown verdict " + s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const LemmaReport& r) { return to_json(r).dump(); }

std::string reports_to_json(const std::vector<LemmaReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(indent);
}

std::vector<LemmaReport> reports_from_json(std::string_view text) {
  std::vector<LemmaReport> out;
  try {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw GraphError(ErrorKind::ParseError, "expected a JSON array of reports");
    for (const json& j : arr) {
      LemmaReport r;
      r.lemma = parse_lemma(j.at("lemma").get<std::string>());
      r.instance = j.at("instance").get<std::string>();
      r.params = j.at("params").dump();
      r.hypothesis_met = j.at("hypothesis_met").get<bool>();
      const json& b = j.at("bound");
      r.bound.coeff = Rational(b.at("num").get<std::int64_t>(), b.at("den").get<std::int64_t>());
      r.bound.log2_num = b.at("log2_num").get<std::int64_t>();
      r.bound.log2_den = b.at("log2_den").get<std::int64_t>();
      r.relation = j.value("relation", std::string("at_least")) == "at_most" ? Relation::AtMost : Relation::AtLeast;
      r.measured = parse_rational(j.at("measured"));
      r.verdict = parse_verdict(j.at("verdict").get<std::string>());
      r.reason = j.value("reason", std::string());
      r.dump = j.value("dump", std::string());
      out.push_back(std::move(r));
    }
  } catch (const json::exception& err) {
    throw GraphError(ErrorKind::ParseError, err.what());
  } catch (const GraphError& err) {
    if (err.kind() == ErrorKind::UnknownName) throw GraphError(ErrorKind::ParseError, err.what());
    throw;
  }
  return out;
}

std::string reports_to_csv(const std::vector<LemmaReport>& reports) {
  std::ostringstream out;
  out << "lemma,instance,hypothesis_met,bound,relation,measured,verdict,reason\n";
  for (const auto& r : reports) {
    out << to_string(r.lemma) << ',' << csv_field(r.instance) << ',' << (r.hypothesis_met ? "true" : "false") << ','
        << csv_field(r.bound.str()) << ',' << to_string(r.relation) << ',' << r.measured.str() << ','
        << to_string(r.verdict) << ',' << csv_field(r.reason) << '\n';
  }
  return out.str();
}

std::string summary_table(const std::vector<LemmaReport>& reports) {
  std::map<LemmaId, std::array<int, 3>> counts;
  for (const auto& r : reports) ++counts[r.lemma][static_cast<std::size_t>(r.verdict)];
  std::ostringstream out;
  out << std::left << std::setw(20) << "lemma" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(8) << "skipped" << '\n';
  for (const auto& [id, c] : counts) {
    out << std::left << std::setw(20) << to_string(id) << std::right << std::setw(8) << c[0] << std::setw(8) << c[1]
        << std::setw(8) << c[2] << '\n';
  }
  return out.str();
}

}  // namespace cubicpm
