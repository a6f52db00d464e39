// Shapes of the service payloads. The UI treats all of this as opaque data:
// values, degrees and arrows are displayed exactly as received.

export interface VertexState {
  name: string;
  frozen: boolean;
  degree: number;
  value: string;
}

export interface ArrowState {
  from: string;
  to: string;
  mult: number;
}

export interface SeedState {
  vertices: VertexState[];
  arrows: ArrowState[];
  proxy: string | null;
  history?: string[];
}

export interface SessionState {
  session: string;
  state: SeedState;
}

export interface WitnessRecord {
  sequence: string[];
  slot: string;
  expected: string;
  actual: string;
  detail: string;
}

export interface Report {
  status: string;
  kappa: number | null;
  K: number | null;
  witnesses: WitnessRecord[];
  bounds: Record<string, number>;
  [key: string]: unknown;
}

export type SeedDocument = Record<string, unknown>;
