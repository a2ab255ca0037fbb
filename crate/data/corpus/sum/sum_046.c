// count pairs with a given sum
int main()
{
    int num, goal, v[200], pairs = 0;
    scanf("%d %d", &num, &goal);
    for (int p = 0; p < num; p++)
        scanf("%d", &v[p]);
    for (int p = 0; p < num; p++) {
                for (int m = p + 1; m < num; m++) {
                    if (v[p] + v[m] == goal)
                    pairs++;
                }
    }
    printf("%d\n", pairs);
    return 0;
}
