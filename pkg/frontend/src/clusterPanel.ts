/** What-if clustering panel: pick k and a threshold preset, list each peer
 * group with its medoid highlighted and the medoid's summary as the group's
 * representative profile.  Changing k or preset issues exactly one cluster
 * request and re-renders; the compare pair selection is never touched. */

import { ApiClient, ApiError, SelectionGuard } from "./api.js";
import type { Preset } from "./state.js";
import type { ClustersResponse, RegionSummary } from "./types.js";

export interface ClusterPanelOptions {
  onKChange?: (k: number) => void;
  onPresetChange?: (preset: Preset) => void;
  kChoices?: number[];
}

const DEFAULT_K_CHOICES = [1, 2, 3, 5, 7, 10, 15];

export class ClusterPanel {
  private guard = new SelectionGuard();
  private kSelect: HTMLSelectElement;
  private presetSelect: HTMLSelectElement;
  private status: HTMLElement;
  private body: HTMLElement;
  private regions = new Map<string, RegionSummary>();
  preset: Preset = "thesis";

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
    private readonly options: ClusterPanelOptions = {},
  ) {
    this.kSelect = document.createElement("select");
    this.kSelect.setAttribute("aria-label", "cluster count");
    this.kSelect.setAttribute("data-role", "k-select");
    for (const k of options.kChoices ?? DEFAULT_K_CHOICES) {
      this.kSelect.appendChild(new Option(`k = ${k}`, String(k)));
    }
    this.kSelect.addEventListener("change", () => {
      const k = Number(this.kSelect.value);
      this.options.onKChange?.(k);
      void this.load(k);
    });

    this.presetSelect = document.createElement("select");
    this.presetSelect.setAttribute("aria-label", "threshold preset");
    this.presetSelect.setAttribute("data-role", "preset-select");
    this.presetSelect.appendChild(new Option("thesis (1-3 / 4-7 / 8-10)", "thesis"));
    this.presetSelect.appendChild(new Option("filmer-pritchett (40-40-20)", "filmer-pritchett"));
    this.presetSelect.addEventListener("change", () => {
      this.preset = this.presetSelect.value as Preset;
      this.options.onPresetChange?.(this.preset);
      const k = Number(this.kSelect.value);
      if (k) void this.load(k); // what-if loop: re-query and re-render
    });

    this.status = document.createElement("p");
    this.status.setAttribute("data-role", "cluster-status");
    this.body = document.createElement("div");
    this.body.setAttribute("data-role", "cluster-body");
    const controls = document.createElement("div");
    controls.append(this.kSelect, this.presetSelect);
    root.replaceChildren(controls, this.status, this.body);
  }

  setRegions(regions: RegionSummary[]): void {
    this.regions = new Map(regions.map((r) => [r.id, r]));
  }

  setPreset(preset: Preset): void {
    this.preset = preset;
    this.presetSelect.value = preset;
  }

  async load(k: number): Promise<void> {
    const token = this.guard.next();
    this.kSelect.value = String(k);
    this.status.textContent = `Clustering with k = ${k}…`;
    try {
      const payload = await this.client.clusters(k);
      if (!this.guard.isCurrent(token)) return;
      this.render(payload);
      this.status.textContent = "";
    } catch (err) {
      if (!this.guard.isCurrent(token)) return;
      this.body.replaceChildren();
      if (err instanceof ApiError && err.status === 400) {
        this.status.textContent = `invalid k: ${err.message}`;
      } else if (err instanceof ApiError && err.status === 409) {
        this.status.textContent = "No dataset loaded — load one to begin.";
      } else {
        this.status.textContent = `service error: ${(err as Error).message}`;
      }
    }
  }

  private summaryLine(id: string): string {
    const summary = this.regions.get(id);
    if (!summary) return id;
    return `${id} — pop ${String(summary.population)}, LI ${String(summary.li)}, HI ${String(summary.hi)}, group ${summary.group}`;
  }

  private render(payload: ClustersResponse): void {
    const header = document.createElement("p");
    header.setAttribute("data-role", "silhouette");
    header.textContent = `k = ${String(payload.k)}, average silhouette: ${String(payload.avg_silhouette)}`;
    const list = document.createElement("div");
    list.setAttribute("data-role", "groups");
    for (const medoid of payload.medoids) {
      const group = document.createElement("section");
      group.setAttribute("data-group", medoid);
      const title = document.createElement("h4");
      title.setAttribute("data-role", "medoid");
      title.textContent = this.summaryLine(medoid);
      group.appendChild(title);
      const members = document.createElement("ul");
      for (const member of payload.groups[medoid] ?? []) {
        const item = document.createElement("li");
        item.textContent = this.summaryLine(member);
        if (member === medoid) item.setAttribute("data-medoid", "true");
        members.appendChild(item);
      }
      group.appendChild(members);
      list.appendChild(group);
    }
    this.body.replaceChildren(header, list);
  }
}
