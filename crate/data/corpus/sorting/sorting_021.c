// sort records by key
typedef struct {
    int key;
    int id;
} node;

int main()
{
    node arr[500], temp;
    int cnt;
    scanf("%d", &cnt);
    for (int k = 0; k < cnt; k++) {
        scanf("%d", &arr[k].key);
        arr[k].id = k + 1;
    }
    for (int k = 0; k < cnt - 1; k++) {
                for (int m = 0; m < cnt - 1 - k; m++) {
                    if (arr[m].key > arr[m + 1].key) {
                                    temp = arr[m];
                                    arr[m] = arr[m + 1];
                                    arr[m + 1] = temp;
                                }
                }
    }
    for (int k = 0; k < cnt; k++)
        printf("%d ", arr[k].id);
    return 0;
}
