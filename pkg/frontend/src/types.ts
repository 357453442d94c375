/** Wire formats of the session service. */

export interface ScenePoint {
  0: number;
  1: number;
}

export interface SceneWire {
  label: string;
  points: [number, number][];
}

export interface SceneVertex {
  label: string;
  x: number;
  y: number;
}

export interface SceneRegion {
  label: string;
}

export interface Scene {
  width: number;
  height: number;
  wires: SceneWire[];
  vertices: SceneVertex[];
  regions: SceneRegion[];
}

export interface MoveOption {
  family: string;
  height: number;
  direction: "forward" | "backward";
  variant: string | null;
}

export interface Step {
  move: string;
  [key: string]: unknown;
}

export interface StatePayload {
  session: string;
  diagram: unknown;
  dim: number;
  height: number;
  steps: Step[];
}

export interface MovesPayload {
  height: number;
  coords: number[];
  moves: MoveOption[];
}
