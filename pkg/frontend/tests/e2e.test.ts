// Live end-to-end checks against a running service. Gated behind
// WINWIN_E2E so the regular unit run stays self-contained:
//
//   winwin serve --port 8311 &
//   WINWIN_E2E=1 WINWIN_API=http://127.0.0.1:8311 npx vitest run tests/e2e.test.ts

import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { describe, expect, it } from "vitest";

import { WinWinApi } from "../src/api";
import { parseDealCsv } from "../src/csv";

const BASE = process.env.WINWIN_API ?? "http://127.0.0.1:8311";

describe.skipIf(!process.env.WINWIN_E2E)("live service", () => {
  const api = new WinWinApi(BASE);

  it("answers the what-if query for the share-sale frame", async () => {
    const evaluation = await api.evaluate(33, 66, 40);
    expect(evaluation.swp_percent).toBe(21);
    expect(evaluation.bwp_percent).toBe(79);
  });

  it("closes the inverse loop at the requested share", async () => {
    const inverse = await api.inverse(33, 66, "increasing", 0.4);
    expect(inverse.price).toBeCloseTo(46.2, 9);
    const evaluation = await api.evaluate(33, 66, inverse.price);
    expect(evaluation.swp_percent).toBe(40);
  });

  it("scores the bundled oil ledger with the documented counts", async () => {
    const csv = readFileSync(
      resolve(process.cwd(), "../src/fuzzywinwin/data/oil_deal.csv"),
      "utf-8",
    );
    const { records } = parseDealCsv(csv);
    const response = await api.ledger(
      { constant_cost: 10.57, settled_offset: -16,
        increasing_party: "Iraq", decreasing_party: "Jordan" },
      records,
    );
    expect(response.summary.increasing_win_count).toBe(27);
    expect(response.summary.decreasing_win_count).toBe(28);
    expect(response.summary.tie_count).toBe(5);
  });
});
