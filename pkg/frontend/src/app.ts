/** Application shell: tabs, dataset status, and URL-hash state sync.  The
 * whole view state round-trips through the hash, so a reload restores the
 * identical view. */

import { ApiClient, FetchLike } from "./api.js";
import { ClusterPanel } from "./clusterPanel.js";
import { ComparePanel } from "./compare.js";
import { DistanceColumn, DistanceTable } from "./distanceTable.js";
import { DEFAULT_STATE, decodeState, encodeState, Tab, ViewState } from "./state.js";
import type { RegionSummary } from "./types.js";

export interface AppOptions {
  baseUrl?: string;
  fetchFn?: FetchLike;
  window?: Window;
}

export class App {
  readonly client: ApiClient;
  readonly compare: ComparePanel;
  readonly distances: DistanceTable;
  readonly clusters: ClusterPanel;
  state: ViewState = { ...DEFAULT_STATE };
  private win: Window;
  private tabs = new Map<Tab, { button: HTMLButtonElement; panel: HTMLElement }>();
  private statusLine: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    options: AppOptions = {},
  ) {
    this.win = options.window ?? window;
    this.client = new ApiClient(
      options.baseUrl ?? "",
      options.fetchFn ?? ((url, init) => this.win.fetch(url, init)),
    );

    const nav = document.createElement("nav");
    nav.setAttribute("aria-label", "views");
    this.statusLine = document.createElement("p");
    this.statusLine.setAttribute("data-role", "dataset-status");

    const panels = document.createElement("main");
    for (const tab of ["compare", "distances", "clusters"] as const) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = tab;
      button.setAttribute("data-tab", tab);
      button.addEventListener("click", () => this.update({ tab }));
      nav.appendChild(button);
      const panel = document.createElement("section");
      panel.setAttribute("data-panel", tab);
      panel.hidden = tab !== this.state.tab;
      panels.appendChild(panel);
      this.tabs.set(tab, { button, panel });
    }
    root.replaceChildren(nav, this.statusLine, panels);

    this.compare = new ComparePanel(this.tabs.get("compare")!.panel, this.client, {
      onPairChange: (a, b) => this.update({ a, b }, { refresh: false }),
    });
    this.distances = new DistanceTable(this.tabs.get("distances")!.panel, this.client, {
      onRowPick: (a, b) => this.update({ a, b, tab: "compare" }),
      onSortChange: (sortKey, sortDir) => this.update({ sortKey, sortDir }, { refresh: false }),
      onFilterChange: (filterRegion) => this.update({ filterRegion }, { refresh: false }),
    });
    this.clusters = new ClusterPanel(this.tabs.get("clusters")!.panel, this.client, {
      onKChange: (k) => this.update({ k }, { refresh: false }),
      onPresetChange: (preset) => this.update({ preset }, { refresh: false }),
    });

    this.win.addEventListener("hashchange", () => {
      const incoming = this.win.location.hash.replace(/^#/, "");
      if (incoming === encodeState(this.state)) return; // echo of our own write
      void this.applyState(decodeState(this.win.location.hash));
    });
  }

  /** Fetch the region list and restore the view encoded in the URL hash. */
  async start(): Promise<void> {
    await this.refreshRegions();
    await this.applyState(decodeState(this.win.location.hash));
  }

  async refreshRegions(): Promise<RegionSummary[]> {
    try {
      const regions = await this.client.regions();
      this.compare.setRegions(regions);
      this.distances.setRegions(regions);
      this.clusters.setRegions(regions);
      this.statusLine.textContent = `${regions.length} regions loaded`;
      return regions;
    } catch {
      this.statusLine.textContent = "No dataset loaded — POST one to /dataset or use demo mode.";
      return [];
    }
  }

  private syncHash(): void {
    const encoded = encodeState(this.state);
    if (this.win.location.hash.replace(/^#/, "") !== encoded) {
      this.win.location.hash = encoded;
    }
  }

  private showTab(tab: Tab): void {
    for (const [name, entry] of this.tabs) {
      entry.panel.hidden = name !== tab;
      entry.button.setAttribute("aria-current", name === tab ? "page" : "false");
    }
  }

  /** Merge a state patch, write it to the hash, and (by default) re-render
   * the owning panel. */
  update(patch: Partial<ViewState>, { refresh = true } = {}): void {
    this.state = { ...this.state, ...patch };
    this.syncHash();
    this.showTab(this.state.tab);
    if (!refresh) return;
    void this.applyState(this.state);
  }

  private async applyState(state: ViewState): Promise<void> {
    this.state = state;
    this.showTab(state.tab);
    this.syncHash();
    this.clusters.setPreset(state.preset);
    this.distances.setSort(state.sortKey as DistanceColumn, state.sortDir);
    const jobs: Promise<void>[] = [];
    const pair = this.compare.getPair();
    if (pair.a !== state.a || pair.b !== state.b) {
      jobs.push(this.compare.setPair(state.a, state.b));
    }
    jobs.push(this.distances.load(state.filterRegion));
    if (state.k !== null) jobs.push(this.clusters.load(state.k));
    await Promise.all(jobs);
  }
}
