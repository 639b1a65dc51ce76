/** View state and its URL-hash codec: a reload restores the identical view. */

export type Tab = "compare" | "distances" | "clusters";
export type SortDir = "asc" | "desc";
export type Preset = "thesis" | "filmer-pritchett";

export interface ViewState {
  tab: Tab;
  a: string | null;
  b: string | null;
  k: number | null;
  preset: Preset;
  filterRegion: string | null;
  sortKey: string;
  sortDir: SortDir;
}

export const DEFAULT_STATE: ViewState = {
  tab: "compare",
  a: null,
  b: null,
  k: null,
  preset: "thesis",
  filterRegion: null,
  sortKey: "distance",
  sortDir: "asc",
};

const TABS: readonly Tab[] = ["compare", "distances", "clusters"];
const PRESETS: readonly Preset[] = ["thesis", "filmer-pritchett"];

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  params.set("tab", state.tab);
  if (state.a) params.set("a", state.a);
  if (state.b) params.set("b", state.b);
  if (state.k !== null) params.set("k", String(state.k));
  if (state.preset !== DEFAULT_STATE.preset) params.set("preset", state.preset);
  if (state.filterRegion) params.set("filter", state.filterRegion);
  if (state.sortKey !== DEFAULT_STATE.sortKey) params.set("sort", state.sortKey);
  if (state.sortDir !== DEFAULT_STATE.sortDir) params.set("dir", state.sortDir);
  return params.toString();
}

export function decodeState(hash: string): ViewState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const tab = params.get("tab");
  const preset = params.get("preset");
  const k = params.get("k");
  const dir = params.get("dir");
  return {
    tab: TABS.includes(tab as Tab) ? (tab as Tab) : DEFAULT_STATE.tab,
    a: params.get("a"),
    b: params.get("b"),
    k: k !== null && /^\d+$/.test(k) ? Number(k) : null,
    preset: PRESETS.includes(preset as Preset) ? (preset as Preset) : DEFAULT_STATE.preset,
    filterRegion: params.get("filter"),
    sortKey: params.get("sort") ?? DEFAULT_STATE.sortKey,
    sortDir: dir === "desc" ? "desc" : DEFAULT_STATE.sortDir,
  };
}
