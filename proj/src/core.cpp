// SPDX-License-Identifier: Apache-2.0
#include "fedlink/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fedlink/csv.hpp"

namespace fedlink {

// ---------------------------------------------------------------------------
// Enum names
// ---------------------------------------------------------------------------

std::string_view to_string(System system) {
  switch (system) {
    case System::HIPE: return "HIPE";
    case System::CDM: return "CDM";
    case System::PCRS: return "PCRS";
    case System::RETINA_SCREEN: return "RETINA_SCREEN";
  }
  return "?";
}

std::optional<System> system_from_string(std::string_view name) {
  for (System s : kAllSystems) {
    if (name == to_string(s)) return s;
  }
  // Accept the file-layout spelling too.
  if (str::iequals(name, "retina_screen") || str::iequals(name, "retinascreen")) {
    return System::RETINA_SCREEN;
  }
  for (System s : kAllSystems) {
    if (str::iequals(name, to_string(s))) return s;
  }
  return std::nullopt;
}

std::string_view to_string(IdentifierKind kind) {
  switch (kind) {
    case IdentifierKind::MRN: return "MRN";
    case IdentifierKind::IHI: return "IHI";
    case IdentifierKind::CDM_ID: return "CDM_ID";
    case IdentifierKind::PCRS_ID: return "PCRS_ID";
    case IdentifierKind::RS_ID: return "RS_ID";
    case IdentifierKind::MOBILE: return "MOBILE";
    case IdentifierKind::EIRCODE_KEY: return "EIRCODE_KEY";
    case IdentifierKind::META_ID: return "META_ID";
  }
  return "?";
}

std::optional<IdentifierKind> identifier_kind_from_string(std::string_view name) {
  static const std::array<IdentifierKind, 8> kinds = {
      IdentifierKind::MRN,     IdentifierKind::IHI,
      IdentifierKind::CDM_ID,  IdentifierKind::PCRS_ID,
      IdentifierKind::RS_ID,   IdentifierKind::MOBILE,
      IdentifierKind::EIRCODE_KEY, IdentifierKind::META_ID};
  for (IdentifierKind k : kinds) {
    if (str::iequals(name, to_string(k))) return k;
  }
  return std::nullopt;
}

bool identifier_value_ok(IdentifierKind kind, std::string_view value) {
  switch (kind) {
    case IdentifierKind::MRN:
    case IdentifierKind::IHI:
    case IdentifierKind::CDM_ID:
    case IdentifierKind::PCRS_ID:
    case IdentifierKind::RS_ID:
      return !value.empty() && str::is_digits(value);
    case IdentifierKind::MOBILE:
      return (value.size() == 9 || value.size() == 10) && str::is_digits(value);
    case IdentifierKind::EIRCODE_KEY:
      return value.size() == 3 && std::isalpha(static_cast<unsigned char>(value[0])) &&
             std::isalnum(static_cast<unsigned char>(value[1])) &&
             std::isalnum(static_cast<unsigned char>(value[2]));
    case IdentifierKind::META_ID:
      return !value.empty();
  }
  return false;
}

std::optional<System> system_of_identifier(IdentifierKind kind) {
  switch (kind) {
    case IdentifierKind::MRN: return System::HIPE;
    case IdentifierKind::CDM_ID: return System::CDM;
    case IdentifierKind::PCRS_ID: return System::PCRS;
    case IdentifierKind::RS_ID: return System::RETINA_SCREEN;
    default: return std::nullopt;
  }
}

IdentifierKind primary_identifier_of(System system) {
  switch (system) {
    case System::HIPE: return IdentifierKind::MRN;
    case System::CDM: return IdentifierKind::CDM_ID;
    case System::PCRS: return IdentifierKind::PCRS_ID;
    case System::RETINA_SCREEN: return IdentifierKind::RS_ID;
  }
  return IdentifierKind::MRN;
}

std::string_view to_string(FieldClass field_class) {
  switch (field_class) {
    case FieldClass::PII: return "PII";
    case FieldClass::QUASI_IDENTIFIER: return "QUASI_IDENTIFIER";
    case FieldClass::CLINICAL: return "CLINICAL";
    case FieldClass::ADMINISTRATIVE: return "ADMINISTRATIVE";
    case FieldClass::AGGREGATE: return "AGGREGATE";
  }
  return "?";
}

std::optional<FieldClass> field_class_from_string(std::string_view name) {
  static const std::array<FieldClass, 5> classes = {
      FieldClass::PII, FieldClass::QUASI_IDENTIFIER, FieldClass::CLINICAL,
      FieldClass::ADMINISTRATIVE, FieldClass::AGGREGATE};
  for (FieldClass c : classes) {
    if (str::iequals(name, to_string(c))) return c;
  }
  return std::nullopt;
}

std::string_view to_string(ValueType type) {
  switch (type) {
    case ValueType::STRING: return "STRING";
    case ValueType::INT: return "INT";
    case ValueType::DATE: return "DATE";
    case ValueType::DECIMAL: return "DECIMAL";
    case ValueType::ENUM: return "ENUM";
  }
  return "?";
}

std::optional<ValueType> value_type_from_string(std::string_view name) {
  static const std::array<ValueType, 5> types = {
      ValueType::STRING, ValueType::INT, ValueType::DATE, ValueType::DECIMAL,
      ValueType::ENUM};
  for (ValueType t : types) {
    if (str::iequals(name, to_string(t))) return t;
  }
  return std::nullopt;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::IdentifierConflict: return "IdentifierConflict";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::SpecSyntax: return "SpecSyntax";
    case ErrorCode::ArityViolation: return "ArityViolation";
    case ErrorCode::CombinerMissing: return "CombinerMissing";
    case ErrorCode::UnknownConditionType: return "UnknownConditionType";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::AccessDenied: return "AccessDenied";
    case ErrorCode::DuplicateAssetId: return "DuplicateAssetId";
    case ErrorCode::UnknownAssetId: return "UnknownAssetId";
    case ErrorCode::ScriptSyntax: return "ScriptSyntax";
    case ErrorCode::UnknownRole: return "UnknownRole";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// Dates
// ---------------------------------------------------------------------------

namespace {

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return lengths[month - 1];
}

// Howard Hinnant's civil-days algorithm.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

}  // namespace

bool Date::valid(int year, int month, int day) {
  return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1 &&
         day <= days_in_month(year, month);
}

std::optional<Date> Date::parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto digits = [](std::string_view s) { return str::is_digits(s); };
  if (!digits(text.substr(0, 4)) || !digits(text.substr(5, 2)) || !digits(text.substr(8, 2))) {
    return std::nullopt;
  }
  int y = 0, m = 0, d = 0;
  std::from_chars(text.data(), text.data() + 4, y);
  std::from_chars(text.data() + 5, text.data() + 7, m);
  std::from_chars(text.data() + 8, text.data() + 10, d);
  if (!valid(y, m, d)) return std::nullopt;
  return Date{y, m, d};
}

std::string Date::str() const {
  char buf[11];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::int64_t Date::serial() const { return days_from_civil(year, month, day); }

Date Date::from_serial(std::int64_t days) { return civil_from_days(days); }

// ---------------------------------------------------------------------------
// Schema descriptors
// ---------------------------------------------------------------------------

bool value_matches_type(std::string_view text, const ColumnSpec& column) {
  switch (column.type) {
    case ValueType::STRING:
      return !text.empty();
    case ValueType::INT: {
      std::string_view body = text;
      if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
      return !body.empty() && str::is_digits(body);
    }
    case ValueType::DATE:
      return Date::parse(text).has_value();
    case ValueType::DECIMAL: {
      std::string_view body = text;
      if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
      auto dot = body.find('.');
      if (dot == std::string_view::npos) return !body.empty() && str::is_digits(body);
      return dot > 0 && dot + 1 < body.size() && str::is_digits(body.substr(0, dot)) &&
             str::is_digits(body.substr(dot + 1));
    }
    case ValueType::ENUM:
      return std::find(column.enum_values.begin(), column.enum_values.end(), text) !=
             column.enum_values.end();
  }
  return false;
}

int SchemaDescriptor::column_index(std::string_view name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

const ColumnSpec& SchemaDescriptor::column(std::string_view name) const {
  int idx = column_index(name);
  if (idx < 0) {
    fail(ErrorCode::UnknownColumn,
         "no column '" + std::string(name) + "' in " + std::string(to_string(system)) +
             " descriptor");
  }
  return columns[idx];
}

namespace {

// Strips a trailing "# ..." comment (outside of any token) and whitespace.
std::string strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  return str::trim(line);
}

ColumnSpec parse_column_line(const std::vector<std::string>& tokens,
                             std::string_view source_name, int line_no) {
  auto syntax = [&](const std::string& what) {
    fail(ErrorCode::SpecSyntax, std::string(source_name) + ":" + std::to_string(line_no) +
                                    ": " + what);
  };
  if (tokens.size() != 5) syntax("expected: column <name> <type> <class> <required|nullable>");
  ColumnSpec col;
  col.name = tokens[1];
  std::string type_token = tokens[2];
  auto paren = type_token.find('(');
  if (paren != std::string::npos) {
    if (type_token.back() != ')') syntax("malformed enum values in '" + type_token + "'");
    std::string values = type_token.substr(paren + 1, type_token.size() - paren - 2);
    col.enum_values = str::split(values, '|');
    type_token = type_token.substr(0, paren);
  }
  auto type = value_type_from_string(type_token);
  if (!type) syntax("unknown value type '" + type_token + "'");
  col.type = *type;
  if (col.type == ValueType::ENUM && col.enum_values.empty()) {
    syntax("ENUM column '" + col.name + "' lists no values");
  }
  if (col.type != ValueType::ENUM && !col.enum_values.empty()) {
    syntax("only ENUM columns may list values");
  }
  auto field_class = field_class_from_string(tokens[3]);
  if (!field_class) syntax("unknown field class '" + tokens[3] + "'");
  col.field_class = *field_class;
  if (tokens[4] == "nullable") {
    col.nullable = true;
  } else if (tokens[4] == "required") {
    col.nullable = false;
  } else {
    syntax("expected 'required' or 'nullable', got '" + tokens[4] + "'");
  }
  return col;
}

}  // namespace

SchemaDescriptor parse_schema(std::string_view text, std::string_view source_name) {
  SchemaDescriptor descriptor;
  bool saw_system = false;
  bool saw_primary = false;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = strip_comment(raw_line);
    if (line.empty()) continue;
    std::vector<std::string> tokens;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) tokens.push_back(token);
    auto syntax = [&](const std::string& what) {
      fail(ErrorCode::SpecSyntax,
           std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
    };
    if (tokens[0] == "system") {
      if (tokens.size() != 2) syntax("expected: system <name>");
      auto system = system_from_string(tokens[1]);
      if (!system) syntax("unknown system '" + tokens[1] + "'");
      descriptor.system = *system;
      saw_system = true;
    } else if (tokens[0] == "primary_identifier") {
      if (tokens.size() != 3) syntax("expected: primary_identifier <kind> <column>");
      auto kind = identifier_kind_from_string(tokens[1]);
      if (!kind) syntax("unknown identifier kind '" + tokens[1] + "'");
      descriptor.primary_identifier = *kind;
      descriptor.primary_column = tokens[2];
      saw_primary = true;
    } else if (tokens[0] == "column") {
      ColumnSpec col = parse_column_line(tokens, source_name, line_no);
      if (descriptor.column_index(col.name) >= 0) {
        syntax("duplicate column '" + col.name + "'");
      }
      descriptor.columns.push_back(std::move(col));
    } else {
      syntax("unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_system) fail(ErrorCode::SpecSyntax, std::string(source_name) + ": missing 'system'");
  if (!saw_primary) {
    fail(ErrorCode::SpecSyntax, std::string(source_name) + ": missing 'primary_identifier'");
  }
  int primary_idx = descriptor.column_index(descriptor.primary_column);
  if (primary_idx < 0) {
    fail(ErrorCode::SpecSyntax, std::string(source_name) + ": primary column '" +
                                    descriptor.primary_column + "' is not declared");
  }
  if (descriptor.columns[primary_idx].nullable) {
    fail(ErrorCode::SpecSyntax,
         std::string(source_name) + ": primary column must be non-nullable");
  }
  return descriptor;
}

SchemaDescriptor load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open schema file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schema(buf.str(), path);
}

std::string serialize_schema(const SchemaDescriptor& descriptor) {
  std::ostringstream out;
  out << "system " << to_string(descriptor.system) << "\n";
  out << "primary_identifier " << to_string(descriptor.primary_identifier) << " "
      << descriptor.primary_column << "\n";
  for (const ColumnSpec& col : descriptor.columns) {
    out << "column " << col.name << " " << to_string(col.type);
    if (col.type == ValueType::ENUM) {
      out << "(" << str::join(col.enum_values, "|") << ")";
    }
    out << " " << to_string(col.field_class) << " " << (col.nullable ? "nullable" : "required")
        << "\n";
  }
  return out.str();
}

const std::vector<ColumnSpec>& pii_sidecar_columns() {
  static const std::vector<ColumnSpec> columns = {
      {"name", ValueType::STRING, FieldClass::PII, false, {}},
      {"dob", ValueType::DATE, FieldClass::PII, false, {}},
      {"sex", ValueType::ENUM, FieldClass::QUASI_IDENTIFIER, false, {"M", "F"}},
      {"mobile", ValueType::STRING, FieldClass::PII, true, {}},
      {"address", ValueType::STRING, FieldClass::PII, false, {}},
      {"eircode_key", ValueType::STRING, FieldClass::QUASI_IDENTIFIER, false, {}},
  };
  return columns;
}

FieldClass classify_field(const SchemaDescriptor& descriptor, std::string_view column_name) {
  int idx = descriptor.column_index(column_name);
  if (idx >= 0) return descriptor.columns[idx].field_class;
  for (const ColumnSpec& col : pii_sidecar_columns()) {
    if (col.name == column_name) return col.field_class;
  }
  fail(ErrorCode::UnknownColumn, "no column '" + std::string(column_name) + "' in " +
                                     std::string(to_string(descriptor.system)));
}

// ---------------------------------------------------------------------------
// Result tables
// ---------------------------------------------------------------------------

int ResultTable::column_index(std::string_view column_name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == column_name) return static_cast<int>(i);
  }
  return -1;
}

void ResultTable::check_shape() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != columns.size()) {
      fail(ErrorCode::TypeError, "result row " + std::to_string(i + 1) + " has " +
                                     std::to_string(rows[i].size()) + " values, expected " +
                                     std::to_string(columns.size()));
    }
  }
  if (provenance.empty()) fail(ErrorCode::InvalidConfig, "result provenance is empty");
}

namespace {

std::string systems_csv(const std::set<System>& systems) {
  std::vector<std::string> names;
  for (System s : systems) names.emplace_back(to_string(s));
  return str::join(names, ",");
}

}  // namespace

void write_result_csv(std::ostream& os, const ResultTable& table, const ResultHeader& header) {
  os << "# " << table.name << "\n";
  if (!header.condition_type.empty()) os << "# condition_type: " << header.condition_type << "\n";
  if (!header.params.empty()) os << "# params: " << header.params << "\n";
  if (!header.role.empty()) os << "# role: " << header.role << "\n";
  os << "# systems: " << systems_csv(table.provenance) << "\n";
  std::vector<std::string> column_specs;
  for (const ResultColumn& col : table.columns) {
    column_specs.push_back(col.name + ":" + std::string(to_string(col.type)) + ":" +
                           std::string(to_string(col.field_class)));
  }
  os << "# columns: " << str::join(column_specs, ",") << "\n";
  std::vector<std::string> names;
  for (const ResultColumn& col : table.columns) names.push_back(col.name);
  csv::write_row(os, names);
  std::vector<std::string> cells(table.columns.size());
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) cells[i] = row[i].value_or("");
    csv::write_row(os, cells);
  }
}

void write_result_csv(const std::string& path, const ResultTable& table,
                      const ResultHeader& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  write_result_csv(out, table, header);
}

ResultTable read_result_csv(const std::string& path, ResultHeader* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  ResultTable table;
  table.columns.clear();
  size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    return true;
  };
  std::string line;
  size_t body_start = 0;
  while (true) {
    body_start = pos;
    if (!next_line(line)) break;
    if (line.rfind("# ", 0) != 0) {
      pos = body_start;
      break;
    }
    std::string content = line.substr(2);
    auto colon = content.find(": ");
    if (colon == std::string::npos) {
      table.name = content;
      continue;
    }
    std::string key = content.substr(0, colon);
    std::string value = content.substr(colon + 2);
    if (key == "systems") {
      for (const std::string& name : str::split(value, ',')) {
        auto system = system_from_string(str::trim(name));
        if (system) table.provenance.insert(*system);
      }
    } else if (key == "columns") {
      for (const std::string& spec : str::split(value, ',')) {
        auto parts = str::split(spec, ':');
        if (parts.size() != 3) fail(ErrorCode::IoError, path + ": malformed columns header");
        ResultColumn col;
        col.name = parts[0];
        col.type = value_type_from_string(parts[1]).value_or(ValueType::STRING);
        col.field_class =
            field_class_from_string(parts[2]).value_or(FieldClass::ADMINISTRATIVE);
        table.columns.push_back(col);
      }
    } else if (key == "condition_type" && header) {
      header->condition_type = value;
    } else if (key == "params" && header) {
      header->params = value;
    } else if (key == "role" && header) {
      header->role = value;
    }
  }

  auto records = csv::parse(text.substr(pos), path);
  if (records.empty()) fail(ErrorCode::IoError, path + ": missing header row");
  if (records[0].size() != table.columns.size()) {
    fail(ErrorCode::IoError, path + ": header row does not match columns comment");
  }
  for (size_t i = 0; i < records[0].size(); ++i) {
    if (records[0][i] != table.columns[i].name) {
      fail(ErrorCode::IoError, path + ": header row does not match columns comment");
    }
  }
  for (size_t r = 1; r < records.size(); ++r) {
    std::vector<Cell> row;
    row.reserve(records[r].size());
    for (const std::string& value : records[r]) {
      row.push_back(value.empty() ? Cell{} : Cell{value});
    }
    if (row.size() != table.columns.size()) {
      fail(ErrorCode::IoError, path + ": row " + std::to_string(r) + " has wrong arity");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Areas
// ---------------------------------------------------------------------------

const std::vector<Area>& area_registry() {
  static const std::vector<Area> areas = {
      {"A63", "Greystones"}, {"A82", "Kells"},        {"C15", "Navan"},
      {"D01", "Dublin 1"},   {"D02", "Dublin 2"},     {"D04", "Dublin 4"},
      {"D08", "Dublin 8"},   {"E21", "Clonmel"},      {"F12", "Castlerea"},
      {"F52", "Boyle"},      {"F91", "Sligo"},        {"F93", "Lifford"},
      {"H91", "Galway"},     {"K45", "Lusk"},         {"N41", "Carrick-on-Shannon"},
      {"P75", "Bandon"},     {"R95", "Kilkenny"},     {"T12", "Cork"},
      {"V94", "Limerick"},   {"X91", "Waterford"},    {"Y35", "Wexford"},
  };
  return areas;
}

const Area* area_by_key(std::string_view routing_key) {
  for (const Area& area : area_registry()) {
    if (str::iequals(area.routing_key, routing_key)) return &area;
  }
  return nullptr;
}

const Area* area_by_name(std::string_view area_name) {
  for (const Area& area : area_registry()) {
    if (str::iequals(area.name, area_name)) return &area;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Condition-type vocabulary
// ---------------------------------------------------------------------------

const std::vector<std::string>& condition_type_names() {
  static const std::vector<std::string> names = {
      "F1_mrn",          "F1_id",
      "F1_mobile",       "F2_eir",
      "F3_eir_age_data", "F3_eirdesc_age_data",
      "F4_rs_uptake",    "F5_rs_diab_type",
      "F5_Hospital_diabetes", "F6_Hypertension",
      "F7_diab_risk",    "F8_cvd",
      "F9_all_amp",      "F9_hipe_amp",
      "F10_system_gender", "F11_gender_eir",
      "F12_medication",  "F13_activity",
  };
  return names;
}

std::string canonical_condition_type(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"F3_eir_above45_data", "F3_eir_age_data"},
      {"F3_eirdesc_above45_data", "F3_eirdesc_age_data"},
  };
  for (const std::string& canonical : condition_type_names()) {
    if (canonical == name) return canonical;
  }
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  return "";
}

bool is_individual_lookup(std::string_view condition_type) {
  return condition_type == "F1_mrn" || condition_type == "F1_id" ||
         condition_type == "F1_mobile";
}

// ---------------------------------------------------------------------------
// String utilities
// ---------------------------------------------------------------------------

namespace str {

std::string trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view text, char separator) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    auto pos = text.find(separator, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string to_upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += separator;
    out += parts[i];
  }
  return out;
}

}  // namespace str

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace fedlink
