/** Sortable distance grid mirroring the pairwise-distance spreadsheet layout.
 * Rows join the /distances response with the /regions listing; clicking (or
 * keyboard-activating) a row feeds the compare view. */

import { ApiClient, ApiError, SelectionGuard } from "./api.js";
import type { SortDir } from "./state.js";
import type { RegionSummary } from "./types.js";

export const DISTANCE_COLUMNS = [
  "region_1",
  "state_1",
  "region_2",
  "state_2",
  "pop_1",
  "pop_2",
  "hi_1",
  "hi_2",
  "li_1",
  "li_2",
  "distance",
] as const;

export type DistanceColumn = (typeof DISTANCE_COLUMNS)[number];

export interface DistanceTableRow {
  region_1: string;
  state_1: string;
  region_2: string;
  state_2: string;
  pop_1: number;
  pop_2: number;
  hi_1: number;
  hi_2: number;
  li_1: number;
  li_2: number;
  distance: number;
}

export interface DistanceTableOptions {
  onRowPick?: (a: string, b: string) => void;
  onSortChange?: (key: DistanceColumn, dir: SortDir) => void;
  onFilterChange?: (region: string | null) => void;
}

export function sortRows(
  rows: DistanceTableRow[],
  key: DistanceColumn,
  dir: SortDir,
): DistanceTableRow[] {
  const sign = dir === "desc" ? -1 : 1;
  return [...rows].sort((x, y) => {
    const a = x[key];
    const b = y[key];
    if (a === b) return x.region_2 < y.region_2 ? -1 : 1; // stable tie on peer id
    return (a < b ? -1 : 1) * sign;
  });
}

export class DistanceTable {
  private guard = new SelectionGuard();
  private filter: HTMLSelectElement;
  private status: HTMLElement;
  private tableHost: HTMLElement;
  private rows: DistanceTableRow[] = [];
  private regions = new Map<string, RegionSummary>();
  sortKey: DistanceColumn = "distance";
  sortDir: SortDir = "asc";

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
    private readonly options: DistanceTableOptions = {},
  ) {
    this.filter = document.createElement("select");
    this.filter.setAttribute("aria-label", "filter region");
    this.filter.setAttribute("data-role", "distance-filter");
    this.filter.addEventListener("change", () => {
      const region = this.filter.value || null;
      this.options.onFilterChange?.(region);
      void this.load(region);
    });
    this.status = document.createElement("p");
    this.status.setAttribute("data-role", "distance-status");
    this.tableHost = document.createElement("div");
    this.tableHost.setAttribute("data-role", "distance-table");
    root.replaceChildren(this.filter, this.status, this.tableHost);
  }

  setRegions(regions: RegionSummary[]): void {
    this.regions = new Map(regions.map((r) => [r.id, r]));
    const current = this.filter.value;
    this.filter.replaceChildren(new Option("(pick a region)", ""));
    for (const region of regions) this.filter.appendChild(new Option(region.id, region.id));
    this.filter.value = current;
  }

  async load(region: string | null): Promise<void> {
    const token = this.guard.next();
    this.filter.value = region ?? "";
    if (!region) {
      this.rows = [];
      this.status.textContent = "Pick a region to list its pairwise distances.";
      this.tableHost.replaceChildren();
      return;
    }
    this.status.textContent = `Loading distances for ${region}…`;
    try {
      const payload = await this.client.distances(region, "asc");
      if (!this.guard.isCurrent(token)) return;
      const base = this.regions.get(region);
      this.rows = payload.distances.map((row) => {
        const peer = this.regions.get(row.region);
        return {
          region_1: region,
          state_1: "",
          region_2: row.region,
          state_2: "",
          pop_1: base?.population ?? 0,
          pop_2: peer?.population ?? 0,
          hi_1: base?.hi ?? 0,
          hi_2: peer?.hi ?? 0,
          li_1: base?.li ?? 0,
          li_2: peer?.li ?? 0,
          distance: row.distance,
        };
      });
      this.status.textContent = "";
      this.renderTable();
    } catch (err) {
      if (!this.guard.isCurrent(token)) return;
      this.tableHost.replaceChildren();
      this.status.textContent =
        err instanceof ApiError && err.status === 409
          ? "No dataset loaded — load one to begin."
          : `service error: ${(err as Error).message}`;
    }
  }

  setSort(key: DistanceColumn, dir: SortDir): void {
    this.sortKey = key;
    this.sortDir = dir;
    if (this.rows.length) this.renderTable();
  }

  visibleRows(): DistanceTableRow[] {
    return sortRows(this.rows, this.sortKey, this.sortDir);
  }

  private renderTable(): void {
    const table = document.createElement("table");
    const thead = document.createElement("thead");
    const headRow = document.createElement("tr");
    for (const column of DISTANCE_COLUMNS) {
      const th = document.createElement("th");
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = column;
      button.setAttribute("data-sort", column);
      if (column === this.sortKey) button.setAttribute("aria-sort", this.sortDir);
      button.addEventListener("click", () => {
        const dir: SortDir =
          this.sortKey === column && this.sortDir === "asc" ? "desc" : "asc";
        this.setSort(column, dir);
        this.options.onSortChange?.(column, dir);
      });
      th.appendChild(button);
      headRow.appendChild(th);
    }
    thead.appendChild(headRow);
    table.appendChild(thead);

    const tbody = document.createElement("tbody");
    for (const row of this.visibleRows()) {
      const tr = document.createElement("tr");
      tr.tabIndex = 0; // keyboard-reachable row
      tr.setAttribute("data-pair", `${row.region_1}|${row.region_2}`);
      const pick = () => this.options.onRowPick?.(row.region_1, row.region_2);
      tr.addEventListener("click", pick);
      tr.addEventListener("keydown", (event) => {
        if (event.key === "Enter" || event.key === " ") {
          event.preventDefault();
          pick();
        }
      });
      for (const column of DISTANCE_COLUMNS) {
        const td = document.createElement("td");
        td.setAttribute("data-col", column);
        td.textContent = String(row[column]);
        tr.appendChild(td);
      }
      tbody.appendChild(tr);
    }
    table.appendChild(tbody);
    this.tableHost.replaceChildren(table);
  }
}
