// Client-side parser for the deal-record CSV schema: a header row naming
// label / cost_price / reference_price / settled_price (order free, unknown
// columns ignored with a warning), then one record per row. The parsed
// records go straight into the /v1/ledger request body.

import type { DealRecordInput } from "./api";

export class CsvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "CsvError";
  }
}

export interface ParsedLedger {
  records: DealRecordInput[];
  warnings: string[];
}

const RECORD_COLUMNS = ["label", "cost_price", "reference_price", "settled_price"];
const NUMERIC_COLUMNS = ["cost_price", "reference_price", "settled_price"] as const;

function splitRows(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let cell = "";
  let inQuotes = false;
  for (let i = 0; i < text.length; i++) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          cell += '"';
          i += 1;
        } else {
          inQuotes = false;
        }
      } else {
        cell += ch;
      }
    } else if (ch === '"') {
      inQuotes = true;
    } else if (ch === ",") {
      row.push(cell);
      cell = "";
    } else if (ch === "\n" || ch === "\r") {
      if (ch === "\r" && text[i + 1] === "\n") i += 1;
      row.push(cell);
      rows.push(row);
      row = [];
      cell = "";
    } else {
      cell += ch;
    }
  }
  if (cell.length > 0 || row.length > 0) {
    row.push(cell);
    rows.push(row);
  }
  return rows.filter((cells) => cells.some((value) => value.trim() !== ""));
}

export function parseDealCsv(text: string): ParsedLedger {
  const rows = splitRows(text);
  if (rows.length === 0) {
    throw new CsvError("empty file: expected a header row naming the columns");
  }
  const header = rows[0]!.map((name) => name.trim().toLowerCase());
  const unknown = header.filter((name) => name !== "" && !RECORD_COLUMNS.includes(name));
  const warnings = unknown.map((name) => `ignoring unknown column "${name}"`);
  const labelIndex = header.indexOf("label");
  if (labelIndex < 0) {
    throw new CsvError('missing header: expected a "label" column');
  }

  const records: DealRecordInput[] = [];
  rows.slice(1).forEach((cells, offset) => {
    const rowNumber = offset + 2;
    const label = (cells[labelIndex] ?? "").trim();
    if (label === "") {
      throw new CsvError(`row ${rowNumber}: labels cannot be empty`);
    }
    const record: DealRecordInput = { label };
    for (const column of NUMERIC_COLUMNS) {
      const index = header.indexOf(column);
      if (index < 0) continue;
      const raw = (cells[index] ?? "").trim();
      if (raw === "") continue;
      const value = Number(raw);
      if (!Number.isFinite(value)) {
        throw new CsvError(
          `row ${rowNumber}, column "${column}": cannot parse "${raw}" as a decimal`,
        );
      }
      record[column] = value;
    }
    records.push(record);
  });
  return { records, warnings };
}
