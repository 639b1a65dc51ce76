/** Side-by-side comparison panel: region pickers, statistic badges, group
 * chips, dissimilarity gauge, and overlay charts.  Every displayed statistic
 * is the service JSON value rendered verbatim. */

import { ApiClient, ApiError, SelectionGuard } from "./api.js";
import { curveOverlay, gaugeBar, histogramOverlay } from "./charts.js";
import type { CompareResponse, RegionProfile, RegionSummary } from "./types.js";

export interface ComparePanelOptions {
  onPairChange?: (a: string | null, b: string | null) => void;
}

const BADGE_FIELDS = ["ci", "di", "hi", "s", "li"] as const;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

export class ComparePanel {
  private guard = new SelectionGuard();
  private selectA: HTMLSelectElement;
  private selectB: HTMLSelectElement;
  private body: HTMLElement;
  private status: HTMLElement;
  private pair: { a: string | null; b: string | null } = { a: null, b: null };

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
    private readonly options: ComparePanelOptions = {},
  ) {
    const bar = el("div", { class: "compare-bar" });
    this.selectA = el("select", { "aria-label": "first region", "data-role": "select-a" });
    this.selectB = el("select", { "aria-label": "second region", "data-role": "select-b" });
    for (const sel of [this.selectA, this.selectB]) {
      sel.addEventListener("change", () => {
        this.setPair(this.selectA.value || null, this.selectB.value || null);
        this.options.onPairChange?.(this.pair.a, this.pair.b);
      });
      bar.appendChild(sel);
    }
    this.status = el("p", { class: "status", "data-role": "compare-status" });
    this.body = el("div", { class: "compare-body", "data-role": "compare-body" });
    root.replaceChildren(bar, this.status, this.body);
  }

  setRegions(regions: RegionSummary[]): void {
    for (const sel of [this.selectA, this.selectB]) {
      const current = sel.value;
      sel.replaceChildren(el("option", { value: "" }, "(pick a region)"));
      for (const region of regions) {
        sel.appendChild(el("option", { value: region.id }, region.id));
      }
      sel.value = current;
    }
  }

  getPair(): { a: string | null; b: string | null } {
    return { ...this.pair };
  }

  async setPair(a: string | null, b: string | null): Promise<void> {
    this.pair = { a, b };
    this.selectA.value = a ?? "";
    this.selectB.value = b ?? "";
    const token = this.guard.next();
    if (!a || !b) {
      this.status.textContent = "Pick two regions to compare.";
      this.body.replaceChildren();
      return;
    }
    this.status.textContent = `Comparing ${a} and ${b}…`;
    try {
      const payload = await this.client.compare(a, b);
      if (!this.guard.isCurrent(token)) return; // superseded selection
      this.render(payload);
      this.status.textContent = "";
    } catch (err) {
      if (!this.guard.isCurrent(token)) return;
      this.body.replaceChildren();
      if (err instanceof ApiError && err.status === 404) {
        this.status.textContent = `unknown region: ${err.message}`;
      } else if (err instanceof ApiError && err.status === 409) {
        this.status.textContent = "No dataset loaded — load one to begin.";
      } else {
        this.status.textContent = `service error: ${(err as Error).message}`;
      }
    }
  }

  private profileCard(which: "a" | "b", profile: RegionProfile): HTMLElement {
    const card = el("section", { class: "profile-card", "data-role": `profile-${which}` });
    card.appendChild(el("h3", {}, profile.region_id));
    const badges = el("dl", { class: "badges" });
    for (const field of BADGE_FIELDS) {
      badges.appendChild(el("dt", {}, field.toUpperCase()));
      badges.appendChild(
        el("dd", { "data-field": `${field}-${which}` }, String(profile[field])),
      );
    }
    badges.appendChild(el("dt", {}, "population"));
    badges.appendChild(
      el("dd", { "data-field": `population-${which}` }, String(profile.population)),
    );
    card.appendChild(badges);
    const chips = el("div", { class: "chips" });
    chips.appendChild(
      el("span", { class: `chip group-${profile.group}`, "data-field": `group-${which}` }, profile.group),
    );
    chips.appendChild(
      el("span", { class: "chip", "data-field": `class-${which}` }, profile.equivalence_class),
    );
    chips.appendChild(
      el("span", { class: "chip", "data-field": `benchmark-${which}` }, profile.benchmark),
    );
    card.appendChild(chips);
    return card;
  }

  private render(payload: CompareResponse): void {
    const { a, b } = payload.profiles;
    const cards = el("div", { class: "cards" });
    cards.appendChild(this.profileCard("a", a));
    cards.appendChild(this.profileCard("b", b));

    const gauge = el("div", { class: "gauge", "data-role": "gauge" });
    gauge.appendChild(el("span", {}, "dissimilarity: "));
    gauge.appendChild(
      el("span", { "data-field": "total-distance" }, String(payload.total_distance)),
    );
    gauge.appendChild(gaugeBar(payload.total_distance, "dissimilarity gauge"));
    const terms = el("dl", { class: "terms" });
    for (const term of ["size", "shape", "location"] as const) {
      terms.appendChild(el("dt", {}, term));
      terms.appendChild(
        el("dd", { "data-field": `term-${term}` }, String(payload.distance_terms[term])),
      );
    }
    gauge.appendChild(terms);

    const charts = el("div", { class: "charts" });
    const addChart = (title: string, node: SVGSVGElement) => {
      const fig = el("figure");
      fig.appendChild(node);
      fig.appendChild(el("figcaption", {}, title));
      charts.appendChild(fig);
    };
    addChart("decile distribution", histogramOverlay(a.distribution, b.distribution));
    addChart("concentration curve", curveOverlay(a.lorenz, b.lorenz, "concentration curves"));
    addChart("shape signature", curveOverlay(a.bcdfa, b.bcdfa, "shape signatures"));

    this.body.replaceChildren(cards, gauge, charts);
  }
}
