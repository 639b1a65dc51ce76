/** Payload shapes of the ordinal-peer JSON service. */

export interface RegionSummary {
  id: string;
  population: number;
  li: number;
  hi: number;
  group: string;
}

export interface RegionProfile {
  region_id: string;
  population: number;
  distribution: number[];
  excluded_fraction: number;
  ci: number;
  di: number;
  hi: number;
  s: number;
  li: number;
  li_upper: number;
  csd: number;
  bcf: number[];
  lorenz: number[];
  bcdfa: number[];
  skew_class: string | null;
  skew_sub: string | null;
  gamma1: number | null;
  equivalence_class: string;
  equivalence_table: string;
  typology: string;
  group: string;
  benchmark: string;
  benchmark_low: number;
  benchmark_mid: number;
  benchmark_high: number;
  pwavgs_score: number | null;
  pwavgs_rank: number | null;
  pwavgs_decile: number | null;
}

export interface CompareResponse {
  profiles: { a: RegionProfile; b: RegionProfile };
  distance_terms: { size: number; shape: number; location: number };
  total_distance: number;
}

export interface DistanceRow {
  region: string;
  distance: number;
}

export interface DistancesResponse {
  region: string;
  sort: "asc" | "desc";
  distances: DistanceRow[];
}

export interface ClustersResponse {
  fingerprint: string;
  k: number;
  seed: number;
  medoids: string[];
  groups: Record<string, string[]>;
  cost: number;
  avg_silhouette: number | null;
}

export interface ServiceError {
  error: string;
}
