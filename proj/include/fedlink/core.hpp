// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fedlink {

// ---------------------------------------------------------------------------
// Source systems
// ---------------------------------------------------------------------------

enum class System { HIPE, CDM, PCRS, RETINA_SCREEN };

inline constexpr std::array<System, 4> kAllSystems = {
    System::HIPE, System::CDM, System::PCRS, System::RETINA_SCREEN};

std::string_view to_string(System system);
std::optional<System> system_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

enum class IdentifierKind {
  MRN,
  IHI,
  CDM_ID,
  PCRS_ID,
  RS_ID,
  MOBILE,
  EIRCODE_KEY,
  META_ID,
};

std::string_view to_string(IdentifierKind kind);
std::optional<IdentifierKind> identifier_kind_from_string(std::string_view name);

/// Syntactic validity of an identifier value: system ids are nonempty digit
/// strings, mobiles are 9-10 digit strings, Eircode routing keys are 3
/// characters with an alphabetic lead.
bool identifier_value_ok(IdentifierKind kind, std::string_view value);

/// The system that owns a per-system record identifier, if any.
std::optional<System> system_of_identifier(IdentifierKind kind);
IdentifierKind primary_identifier_of(System system);

// ---------------------------------------------------------------------------
// Field classes and value types
// ---------------------------------------------------------------------------

enum class FieldClass { PII, QUASI_IDENTIFIER, CLINICAL, ADMINISTRATIVE, AGGREGATE };

std::string_view to_string(FieldClass field_class);
std::optional<FieldClass> field_class_from_string(std::string_view name);

enum class ValueType { STRING, INT, DATE, DECIMAL, ENUM };

std::string_view to_string(ValueType type);
std::optional<ValueType> value_type_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
  SchemaMismatch,
  TypeError,
  DuplicateIdentifier,
  UnknownColumn,
  InvalidConfig,
  IoError,
  IdentifierConflict,
  UnknownIdentifier,
  SpecSyntax,
  ArityViolation,
  CombinerMissing,
  UnknownConditionType,
  BadParams,
  AccessDenied,
  DuplicateAssetId,
  UnknownAssetId,
  ScriptSyntax,
  UnknownRole,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// ---------------------------------------------------------------------------
// Calendar dates (ISO-8601 calendar dates, proleptic Gregorian)
// ---------------------------------------------------------------------------

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  static bool valid(int year, int month, int day);
  static std::optional<Date> parse(std::string_view text);  // strict YYYY-MM-DD

  std::string str() const;
  std::int64_t serial() const;  // days since 1970-01-01
  static Date from_serial(std::int64_t days);

  auto operator<=>(const Date&) const = default;
};

// ---------------------------------------------------------------------------
// Schema descriptors
// ---------------------------------------------------------------------------

struct ColumnSpec {
  std::string name;
  ValueType type = ValueType::STRING;
  FieldClass field_class = FieldClass::ADMINISTRATIVE;
  bool nullable = false;
  std::vector<std::string> enum_values;  // nonempty iff type == ENUM

  bool operator==(const ColumnSpec&) const = default;
};

/// True when `text` is a well-formed value for the column type (nullability is
/// checked separately by the caller).
bool value_matches_type(std::string_view text, const ColumnSpec& column);

struct SchemaDescriptor {
  System system = System::HIPE;
  IdentifierKind primary_identifier = IdentifierKind::MRN;
  std::string primary_column;
  std::vector<ColumnSpec> columns;

  int column_index(std::string_view name) const;  // -1 when absent
  const ColumnSpec& column(std::string_view name) const;  // UnknownColumn

  bool operator==(const SchemaDescriptor&) const = default;
};

SchemaDescriptor parse_schema(std::string_view text, std::string_view source_name);
SchemaDescriptor load_schema(const std::string& path);
std::string serialize_schema(const SchemaDescriptor& descriptor);

// ---------------------------------------------------------------------------
// PII sidecar shape (identical for all four systems)
// ---------------------------------------------------------------------------

struct PiiEntry {
  std::string name;
  std::string dob;  // YYYY-MM-DD
  std::string sex;  // M | F
  std::optional<std::string> mobile;
  std::string address;
  std::string eircode_key;
};

/// Columns of a PII sidecar file, after the leading primary-identifier column.
const std::vector<ColumnSpec>& pii_sidecar_columns();

/// Field class of a column, consulting first the system descriptor and then
/// the sidecar shape (name, dob, mobile, address live only in sidecars).
FieldClass classify_field(const SchemaDescriptor& descriptor, std::string_view column_name);

// ---------------------------------------------------------------------------
// Result tables
// ---------------------------------------------------------------------------

using Cell = std::optional<std::string>;

struct ResultColumn {
  std::string name;
  ValueType type = ValueType::STRING;
  FieldClass field_class = FieldClass::ADMINISTRATIVE;

  bool operator==(const ResultColumn&) const = default;
};

struct ResultTable {
  std::string name = "result_value";
  std::vector<ResultColumn> columns;
  std::vector<std::vector<Cell>> rows;
  std::set<System> provenance;
  std::int64_t created_at = 0;  // unix seconds; never serialized
  std::optional<std::string> asset_id;

  int column_index(std::string_view column_name) const;
  void check_shape() const;  // row arity vs columns, provenance nonempty
};

/// Metadata carried in the comment header of an exported result table.
struct ResultHeader {
  std::string condition_type;
  std::string params;
  std::string role;
};

void write_result_csv(std::ostream& os, const ResultTable& table, const ResultHeader& header);
void write_result_csv(const std::string& path, const ResultTable& table, const ResultHeader& header);
ResultTable read_result_csv(const std::string& path, ResultHeader* header = nullptr);

// ---------------------------------------------------------------------------
// Eircode routing-key areas
// ---------------------------------------------------------------------------

struct Area {
  std::string routing_key;  // 3 characters, alphabetic lead
  std::string name;
};

const std::vector<Area>& area_registry();
const Area* area_by_key(std::string_view routing_key);    // case-insensitive
const Area* area_by_name(std::string_view area_name);     // case-insensitive

// ---------------------------------------------------------------------------
// Condition-type vocabulary (the 18 dispatchable cases plus aliases)
// ---------------------------------------------------------------------------

const std::vector<std::string>& condition_type_names();
/// Canonical name for `name` (resolving registered aliases), or empty.
std::string canonical_condition_type(std::string_view name);
bool is_individual_lookup(std::string_view condition_type);

// ---------------------------------------------------------------------------
// Small string utilities
// ---------------------------------------------------------------------------

namespace str {

std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char separator);
std::string to_upper(std::string_view text);
std::string to_lower(std::string_view text);
bool iequals(std::string_view a, std::string_view b);
bool is_digits(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view separator);

}  // namespace str

std::uint64_t fnv1a(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace fedlink
