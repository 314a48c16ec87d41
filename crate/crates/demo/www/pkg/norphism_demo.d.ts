/* tslint:disable */
/* eslint-disable */

/**
 * Random weighted digraph searched from the first to the last node, with
 * and without bounds propagated along shortest-path prefixes.
 */
export function astar_demo(seed: bigint, nodes: number, density: number): string;

/**
 * Composes two design problems on chains and tabulates feasibility.
 *
 * `d` and `e` are JSON arrays of `[i, j]` pairs, closed to valid relations.
 */
export function compose_chains(n: number, m: number, k: number, d: string, e: string): string;

/**
 * Resource-limit norphism on a named small poset; `pools` is a JSON array
 * of element-name lists, each taken as the generators of a down-set.
 */
export function resource_limit(space: string, pools: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly astar_demo: (a: bigint, b: number, c: number) => [number, number];
    readonly compose_chains: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly resource_limit: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
