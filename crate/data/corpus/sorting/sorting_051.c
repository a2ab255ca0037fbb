// selection sort
int main()
{
    int size, data[1000], best;
    int sw;
    int i, j;
    scanf("%d", &size);
    i = 0;
    while (i < size) {
        scanf("%d", &data[i]);
        i++;
    }
    i = 0;
    while (i < size - 1) {
        best = i;
        j = i + 1;
        while (j < size) {
        if (data[j] < data[best])
        best = j;
        j++;
        }
        if (best != i) {
        sw = data[i];
        data[i] = data[best];
        data[best] = sw;
        }
        i++;
    }
    i = 0;
    while (i < size) {
        printf("%d ", data[i]);
        i++;
    }
    printf("\n");
    return 0;
}
