/* tslint:disable */
/* eslint-disable */

/**
 * Classifies the Gram matrix `gram` (rows separated by `;`, entries by `,`, each an integer or
 * `p/q`) on the Lie algebra of the catalog entry `group`.
 */
export function analyze_custom(group: string, gram: string): string;

export function analyze_entry(name: string): string;

/**
 * Names, anchors and descriptions of the catalog entries.
 */
export function catalog_entries(): string;

/**
 * Body-velocity geodesic of a catalog metric; samples are every accepted step.
 */
export function geodesic(name: string, v0: Float64Array, t_max: number, rtol: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_custom: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly analyze_entry: (a: number, b: number) => [number, number, number, number];
    readonly catalog_entries: () => [number, number];
    readonly geodesic: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
